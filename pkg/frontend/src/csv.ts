import { FigureError, ResultRow } from "./types.js";

export const EXPECTED_HEADER =
  "setting,algorithm,instance,c,t,mean_pseudo_regret,std_pseudo_regret," +
  "mean_realized_regret,std_realized_regret,trials,master_seed,lb_constant";

/**
 * Parse the experiment harness CSV. This is a strict reader for that one
 * schema, not a general CSV parser: the producer never quotes fields and
 * keeps instance ids comma-free, so records split cleanly on commas. Any
 * header or shape deviation is a schema error.
 */
export function parseResultsCsv(text: string): ResultRow[] {
  const lines = text.split("\n");
  if ((lines[0] ?? "").trim() !== EXPECTED_HEADER) {
    throw new FigureError(`unexpected CSV header: ${lines[0] ?? "<empty>"}`);
  }
  const rows: ResultRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i] ?? "";
    if (line.trim() === "") continue;
    const parts = line.split(",");
    if (parts.length !== 12) {
      throw new FigureError(`line ${i + 1}: expected 12 fields, got ${parts.length}`);
    }
    const setting = parts[0]!;
    if (setting !== "rg" && setting !== "rw") {
      throw new FigureError(`line ${i + 1}: unknown setting ${setting}`);
    }
    const num = (j: number, name: string): number => {
      const v = Number(parts[j]);
      if (!Number.isFinite(v)) {
        throw new FigureError(`line ${i + 1}: ${name} is not a finite number: ${parts[j]}`);
      }
      return v;
    };
    rows.push({
      setting,
      algorithm: parts[1]!,
      instance: parts[2]!,
      c: num(3, "c"),
      t: num(4, "t"),
      meanPseudoRegret: num(5, "mean_pseudo_regret"),
      stdPseudoRegret: num(6, "std_pseudo_regret"),
      meanRealizedRegret: num(7, "mean_realized_regret"),
      stdRealizedRegret: num(8, "std_realized_regret"),
      trials: num(9, "trials"),
      masterSeed: num(10, "master_seed"),
      lbConstant: num(11, "lb_constant"),
    });
  }
  return rows;
}
