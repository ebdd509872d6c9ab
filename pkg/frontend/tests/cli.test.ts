import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { parseArgs, runCli } from "../src/cli.js";
import { FigureError } from "../src/types.js";

const FIXTURES = join(__dirname, "fixtures");

describe("figure CLI", () => {
  it("parses flags into a figure spec", () => {
    const opts = parseArgs([
      "--input", "a.csv", "--input", "b.csv", "--kind", "vs-c", "--out", "x.svg",
      "--metric", "realized", "--algorithms", "frg-tswa,les-ts", "--instance", "mu_dagger",
      "--log-x",
    ]);
    expect(opts.inputs).toEqual(["a.csv", "b.csv"]);
    expect(opts.out).toBe("x.svg");
    expect(opts.spec).toEqual({
      kind: "vs-c",
      metric: "realized",
      algorithms: ["frg-tswa", "les-ts"],
      instance: "mu_dagger",
      logX: true,
    });
  });

  it("rejects missing or unknown flags", () => {
    expect(() => parseArgs(["--kind", "vs-t", "--out", "x"])).toThrow(FigureError);
    expect(() => parseArgs(["--input", "a", "--out", "x"])).toThrow(/--kind/);
    expect(() => parseArgs(["--input", "a", "--kind", "vs-t"])).toThrow(/--out/);
    expect(() => parseArgs(["--frobnicate"])).toThrow(/unknown option/);
    expect(() => parseArgs(["--input", "a", "--kind", "sideways", "--out", "x"])).toThrow(
      /vs-t or vs-c/,
    );
  });

  it("writes byte-identical SVGs across reruns", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const input = join(FIXTURES, "figure2_vs_t.csv");
    const out1 = join(dir, "one.svg");
    const out2 = join(dir, "two.svg");
    expect(runCli(["--input", input, "--kind", "vs-t", "--log-x", "--out", out1])).toBe(0);
    expect(runCli(["--input", input, "--kind", "vs-t", "--log-x", "--out", out2])).toBe(0);
    const a = readFileSync(out1);
    const b = readFileSync(out2);
    expect(a.equals(b)).toBe(true);
    expect(a.toString("utf-8").startsWith('<?xml version="1.0"')).toBe(true);
  });

  it("returns nonzero on bad input and usage errors", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    expect(runCli(["--input", join(dir, "missing.csv"), "--kind", "vs-t", "--out", join(dir, "o.svg")])).toBe(1);
    expect(runCli(["--kind", "vs-t"])).toBe(2);
    // vs-c on a trajectory file: horizon mismatch is a figure error
    const input = join(FIXTURES, "figure2_vs_t.csv");
    expect(runCli(["--input", input, "--kind", "vs-c", "--out", join(dir, "o.svg")])).toBe(1);
  });
});
