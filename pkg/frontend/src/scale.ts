/** Linear and log10 axis scales with deterministic tick generation. */

export interface Scale {
  (value: number): number;
  ticks(): number[];
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  fn.ticks = () => linearTicks(d0, d1);
  return fn;
}

export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  if (d0 <= 0 || d1 <= 0) {
    throw new Error("log scale needs a positive domain");
  }
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0 || 1;
  const fn = ((v: number) => r0 + ((Math.log10(v) - l0) / span) * (r1 - r0)) as Scale;
  fn.ticks = () => logTicks(d0, d1);
  return fn;
}

/** Round-number ticks (1/2/5 progression), 4 to 8 of them. */
export function linearTicks(d0: number, d1: number): number[] {
  if (d0 === d1) return [d0];
  const span = d1 - d0;
  const rawStep = span / 5;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (rawStep <= m * mag) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  let v = Math.ceil(d0 / step) * step;
  for (; v <= d1 + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Powers of ten inside the domain, padded with endpoints if sparse. */
export function logTicks(d0: number, d1: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(d0) - 1e-9); Math.pow(10, e) <= d1 * (1 + 1e-9); e++) {
    const v = Math.pow(10, e);
    if (v >= d0 * (1 - 1e-9)) ticks.push(v);
  }
  if (ticks.length < 2) return [d0, d1];
  return ticks;
}
