/** Figure CLI: reads experiment CSVs, writes a deterministic SVG.
 *
 * Usage:
 *   node dist/cli.js --input results.csv [--input more.csv] --kind vs-t \
 *     --out figure.svg [--metric pseudo|realized] [--algorithms a,b] \
 *     [--instance id] [--log-x]
 */

import { readFileSync, writeFileSync } from "node:fs";
import process from "node:process";

import { parseResultsCsv } from "./csv.js";
import { buildFigure } from "./plot.js";
import { FigureError, FigureSpec, ResultRow } from "./types.js";

interface CliOptions {
  inputs: string[];
  out: string;
  spec: FigureSpec;
}

export function parseArgs(argv: string[]): CliOptions {
  const inputs: string[] = [];
  let out: string | undefined;
  const spec: FigureSpec = { kind: "vs-t" };
  let kindSeen = false;

  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i]!;
    const next = (): string => {
      const v = argv[++i];
      if (v === undefined) throw new FigureError(`${arg} needs a value`);
      return v;
    };
    switch (arg) {
      case "--input":
        inputs.push(next());
        break;
      case "--out":
        out = next();
        break;
      case "--kind": {
        const v = next();
        if (v !== "vs-t" && v !== "vs-c") throw new FigureError(`--kind must be vs-t or vs-c, got ${v}`);
        spec.kind = v;
        kindSeen = true;
        break;
      }
      case "--metric": {
        const v = next();
        if (v !== "pseudo" && v !== "realized") {
          throw new FigureError(`--metric must be pseudo or realized, got ${v}`);
        }
        spec.metric = v;
        break;
      }
      case "--algorithms":
        spec.algorithms = next().split(",").map((s) => s.trim()).filter(Boolean);
        break;
      case "--instance":
        spec.instance = next();
        break;
      case "--log-x":
        spec.logX = true;
        break;
      default:
        throw new FigureError(`unknown option ${arg}`);
    }
  }
  if (inputs.length === 0) throw new FigureError("--input is required");
  if (!kindSeen) throw new FigureError("--kind is required (vs-t or vs-c)");
  if (out === undefined) throw new FigureError("--out is required");
  return { inputs, out, spec };
}

export function runCli(argv: string[]): number {
  let options: CliOptions;
  try {
    options = parseArgs(argv);
  } catch (e) {
    console.error(e instanceof Error ? e.message : String(e));
    return 2;
  }
  try {
    const rows: ResultRow[] = [];
    for (const path of options.inputs) {
      rows.push(...parseResultsCsv(readFileSync(path, "utf-8")));
    }
    const svg = buildFigure(rows, options.spec);
    writeFileSync(options.out, svg, "utf-8");
    console.log(`wrote ${options.out}`);
    return 0;
  } catch (e) {
    console.error(e instanceof Error ? e.message : String(e));
    return 1;
  }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(runCli(process.argv.slice(2)));
}
