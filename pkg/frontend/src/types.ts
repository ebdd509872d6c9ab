/** One record of the experiment CSV (fixed 12-column schema). */
export interface ResultRow {
  setting: "rg" | "rw";
  algorithm: string;
  instance: string;
  c: number;
  t: number;
  meanPseudoRegret: number;
  stdPseudoRegret: number;
  meanRealizedRegret: number;
  stdRealizedRegret: number;
  trials: number;
  masterSeed: number;
  lbConstant: number;
}

export type FigureKind = "vs-t" | "vs-c";
export type Metric = "pseudo" | "realized";

/** What to draw: input selection plus rendering toggles. */
export interface FigureSpec {
  kind: FigureKind;
  /** Algorithm filter; omit to plot every algorithm present. */
  algorithms?: string[];
  /** Instance filter; required when the rows mix instances. */
  instance?: string;
  metric?: Metric;
  /** Log-scaled x axis (vs-t figures only). */
  logX?: boolean;
  width?: number;
  height?: number;
}

export class FigureError extends Error {}
