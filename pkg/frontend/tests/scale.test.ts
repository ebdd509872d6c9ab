import { describe, expect, it } from "vitest";

import { linearScale, linearTicks, logScale, logTicks } from "../src/scale.js";

describe("scales", () => {
  it("linear scale maps endpoints and midpoint", () => {
    const s = linearScale(0, 10, 100, 200);
    expect(s(0)).toBe(100);
    expect(s(10)).toBe(200);
    expect(s(5)).toBe(150);
  });

  it("log scale maps decades evenly", () => {
    const s = logScale(10, 1000, 0, 100);
    expect(s(10)).toBeCloseTo(0, 9);
    expect(s(100)).toBeCloseTo(50, 9);
    expect(s(1000)).toBeCloseTo(100, 9);
    expect(() => logScale(0, 10, 0, 1)).toThrow();
  });

  it("linear ticks are round numbers inside the domain", () => {
    const ticks = linearTicks(0, 173);
    expect(ticks[0]).toBe(0);
    expect(ticks.length).toBeGreaterThanOrEqual(3);
    expect(ticks.every((t) => t >= 0 && t <= 173)).toBe(true);
    const steps = new Set(ticks.slice(1).map((t, i) => +(t - ticks[i]!).toFixed(9)));
    expect(steps.size).toBe(1);
  });

  it("log ticks are powers of ten, endpoints when sparse", () => {
    expect(logTicks(100, 10000)).toEqual([100, 1000, 10000]);
    expect(logTicks(150, 9000)).toEqual([150, 9000]); // only one power inside
  });
});
