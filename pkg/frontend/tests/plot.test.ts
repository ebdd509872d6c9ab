import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { parseResultsCsv } from "../src/csv.js";
import { buildRegretVsC, buildRegretVsT } from "../src/plot.js";
import { FigureError, ResultRow } from "../src/types.js";

const FIXTURES = join(__dirname, "fixtures");

function rowsOf(name: string): ResultRow[] {
  return parseResultsCsv(readFileSync(join(FIXTURES, name), "utf-8"));
}

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("regret vs T figure", () => {
  const rows = rowsOf("figure2_vs_t.csv");

  it("renders exactly the selected series plus the LB overlay", () => {
    const svg = buildRegretVsT(rows, { kind: "vs-t" });
    expect(count(svg, 'data-series="')).toBe(2);
    expect(count(svg, 'data-series="frg-tswa"')).toBe(1);
    expect(count(svg, 'data-series="les-ts"')).toBe(1);
    expect(count(svg, "data-lb-overlay=")).toBe(1);
    expect(svg).toContain("asymptotic lower bound");
    // error bars: one group per (algorithm, checkpoint)
    expect(count(svg, 'data-errorbar="frg-tswa"')).toBe(20);
    expect(count(svg, 'data-errorbar="les-ts"')).toBe(20);
  });

  it("is byte-stable across reruns", () => {
    const a = buildRegretVsT(rows, { kind: "vs-t", logX: true });
    const b = buildRegretVsT(rows, { kind: "vs-t", logX: true });
    expect(a).toBe(b);
  });

  it("filters algorithms and errors on an empty selection", () => {
    const svg = buildRegretVsT(rows, { kind: "vs-t", algorithms: ["frg-tswa"] });
    expect(count(svg, 'data-series="')).toBe(1);
    expect(() => buildRegretVsT(rows, { kind: "vs-t", algorithms: ["nope"] })).toThrow(
      FigureError,
    );
  });

  it("omits the LB overlay when the constant is zero", () => {
    // fixed-reward run with c above the best mean: lb_constant = 0
    const zeroRows = rowsOf("figure_rw_zero_lb.csv");
    expect(zeroRows.every((r) => r.lbConstant === 0)).toBe(true);
    const svg = buildRegretVsT(zeroRows, { kind: "vs-t" });
    expect(count(svg, "data-lb-overlay=")).toBe(0);
    expect(svg).not.toContain("asymptotic lower bound");
  });

  it("rejects rows that mix c values", () => {
    const mixed = rowsOf("figure3_vs_c.csv");
    expect(() => buildRegretVsT(mixed, { kind: "vs-t" })).toThrow(/share c/);
  });

  it("plots realized regret on demand, traceable to the rows", () => {
    const svg = buildRegretVsT(rows, { kind: "vs-t", metric: "realized" });
    expect(svg).toContain("realized regret");
  });

  it("overlay values follow constant * ln t", () => {
    const svg = buildRegretVsT(rows, { kind: "vs-t" });
    const match = svg.match(/data-lb-overlay="([^"]+)"/);
    expect(match).not.toBeNull();
    expect(Number(match![1])).toBeCloseTo(13.3333, 3);
  });
});

describe("regret vs c figure", () => {
  const rows = rowsOf("figure3_vs_c.csv");

  it("renders one error-barred series per algorithm", () => {
    const svg = buildRegretVsC(rows, { kind: "vs-c" });
    expect(count(svg, 'data-series="')).toBe(2);
    expect(count(svg, 'data-errorbar="frg-tswa"')).toBe(5);
    expect(count(svg, 'data-errorbar="les-ts"')).toBe(5);
    expect(count(svg, "data-lb-overlay=")).toBe(0);
  });

  it("is byte-stable across reruns", () => {
    expect(buildRegretVsC(rows, { kind: "vs-c" })).toBe(buildRegretVsC(rows, { kind: "vs-c" }));
  });

  it("accepts a single-c selection without crashing", () => {
    const single = rows.filter((r) => r.c === rows[0]!.c);
    const svg = buildRegretVsC(single, { kind: "vs-c" });
    expect(count(svg, 'data-series="')).toBe(2);
  });

  it("rejects rows that mix horizons", () => {
    const mixed = rowsOf("figure2_vs_t.csv");
    expect(() => buildRegretVsC(mixed, { kind: "vs-c" })).toThrow(/share the horizon/);
  });

  it("never mutates its input rows", () => {
    const before = JSON.stringify(rows);
    buildRegretVsC(rows, { kind: "vs-c" });
    expect(JSON.stringify(rows)).toBe(before);
  });
});
