/** Figure composition: regret vs T with the asymptotic lower-bound overlay,
 * and regret vs c at fixed T. Every plotted mean/std comes straight from a
 * CSV row; the only synthetic curve is the lower-bound overlay
 * constant * ln t, drawn when the constant is positive. */

import { fmt, label, line, polyline, svgDocument, tag, text } from "./svg.js";
import { linearScale, logScale, Scale } from "./scale.js";
import { FigureError, FigureSpec, Metric, ResultRow } from "./types.js";

const PALETTE = ["#1f6fb4", "#d95f02", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"];
const LB_COLOR = "#444444";

interface Series {
  algorithm: string;
  points: Array<{ x: number; mean: number; std: number }>;
}

function metricOf(row: ResultRow, metric: Metric): { mean: number; std: number } {
  return metric === "realized"
    ? { mean: row.meanRealizedRegret, std: row.stdRealizedRegret }
    : { mean: row.meanPseudoRegret, std: row.stdPseudoRegret };
}

function selectRows(rows: ResultRow[], spec: FigureSpec): ResultRow[] {
  let out = rows;
  if (spec.instance !== undefined) {
    out = out.filter((r) => r.instance === spec.instance);
  }
  if (spec.algorithms !== undefined) {
    const allow = new Set(spec.algorithms);
    out = out.filter((r) => allow.has(r.algorithm));
  }
  if (out.length === 0) {
    throw new FigureError("empty selection: no rows match the figure spec");
  }
  const instances = new Set(out.map((r) => r.instance));
  if (instances.size > 1) {
    throw new FigureError(
      `rows mix instances (${[...instances].sort().join(", ")}); pass an instance filter`,
    );
  }
  return out;
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function groupSeries(rows: ResultRow[], x: (r: ResultRow) => number, metric: Metric): Series[] {
  const byAlgo = new Map<string, ResultRow[]>();
  for (const r of rows) {
    const bucket = byAlgo.get(r.algorithm);
    if (bucket) bucket.push(r);
    else byAlgo.set(r.algorithm, [r]);
  }
  const algorithms = [...byAlgo.keys()].sort();
  return algorithms.map((algorithm) => {
    const points = byAlgo
      .get(algorithm)!
      .map((r) => ({ x: x(r), ...metricOf(r, metric) }))
      .sort((a, b) => a.x - b.x);
    return { algorithm, points };
  });
}

interface Frame {
  width: number;
  height: number;
  xScale: Scale;
  yScale: Scale;
  body: string[];
}

function frame(
  spec: FigureSpec,
  xDomain: [number, number],
  yMax: number,
  xLabel: string,
  yLabel: string,
  title: string,
): Frame {
  const width = spec.width ?? 760;
  const height = spec.height ?? 480;
  const m = { left: 64, right: 16, top: 34, bottom: 46 };
  const x0 = m.left;
  const x1 = width - m.right;
  const y0 = height - m.bottom;
  const y1 = m.top;
  const pad = xDomain[0] === xDomain[1] ? Math.max(1, Math.abs(xDomain[0]) * 0.1) : 0;
  const xScale =
    spec.logX && spec.kind === "vs-t"
      ? logScale(xDomain[0], xDomain[1], x0, x1)
      : linearScale(xDomain[0] - pad, xDomain[1] + pad, x0, x1);
  const yScale = linearScale(0, yMax <= 0 ? 1 : yMax * 1.06, y0, y1);

  const body: string[] = [];
  body.push(tag("rect", { x: "0", y: "0", width: String(width), height: String(height), fill: "#ffffff" }));
  body.push(text(width / 2, 20, title, { "text-anchor": "middle", "font-size": "14" }));
  // axes
  body.push(line(x0, y0, x1, y0, { stroke: "#000000", "stroke-width": "1" }));
  body.push(line(x0, y0, x0, y1, { stroke: "#000000", "stroke-width": "1" }));
  for (const t of xScale.ticks()) {
    const px = xScale(t);
    body.push(line(px, y0, px, y0 + 4, { stroke: "#000000", "stroke-width": "1" }));
    body.push(text(px, y0 + 18, label(t), { "text-anchor": "middle", "font-size": "11" }));
  }
  for (const t of yScale.ticks()) {
    const py = yScale(t);
    body.push(line(x0 - 4, py, x0, py, { stroke: "#000000", "stroke-width": "1" }));
    body.push(text(x0 - 8, py + 4, label(t), { "text-anchor": "end", "font-size": "11" }));
    if (t > 0) {
      body.push(line(x0, py, x1, py, { stroke: "#dddddd", "stroke-width": "0.5" }));
    }
  }
  body.push(text((x0 + x1) / 2, height - 10, xLabel, { "text-anchor": "middle", "font-size": "12" }));
  body.push(
    tag(
      "text",
      {
        x: fmt(16),
        y: fmt((y0 + y1) / 2),
        transform: `rotate(-90 16 ${fmt((y0 + y1) / 2)})`,
        "text-anchor": "middle",
        "font-size": "12",
      },
      yLabel,
    ),
  );
  return { width, height, xScale, yScale, body };
}

function drawSeries(f: Frame, series: Series[]): void {
  series.forEach((s, idx) => {
    const color = PALETTE[idx % PALETTE.length]!;
    const pts: Array<[number, number]> = s.points.map((p) => [f.xScale(p.x), f.yScale(p.mean)]);
    f.body.push(
      polyline(pts, {
        stroke: color,
        "stroke-width": "1.8",
        "data-series": s.algorithm,
      }),
    );
    for (const p of s.points) {
      const px = f.xScale(p.x);
      const pyLo = f.yScale(Math.max(0, p.mean - p.std));
      const pyHi = f.yScale(p.mean + p.std);
      const bar = [
        line(px, pyLo, px, pyHi, { stroke: color, "stroke-width": "1" }),
        line(px - 3, pyLo, px + 3, pyLo, { stroke: color, "stroke-width": "1" }),
        line(px - 3, pyHi, px + 3, pyHi, { stroke: color, "stroke-width": "1" }),
      ].join("");
      f.body.push(tag("g", { "data-errorbar": s.algorithm }, bar));
      f.body.push(
        tag("circle", {
          cx: fmt(px),
          cy: fmt(f.yScale(p.mean)),
          r: "2.4",
          fill: color,
          "data-point": s.algorithm,
        }),
      );
    }
  });
}

function drawLegend(f: Frame, entries: Array<{ name: string; color: string; dashed?: boolean }>): void {
  const x = f.width - 210;
  let y = 44;
  for (const e of entries) {
    f.body.push(
      line(x, y - 4, x + 26, y - 4, {
        stroke: e.color,
        "stroke-width": "2",
        ...(e.dashed ? { "stroke-dasharray": "6 3" } : {}),
      }),
    );
    f.body.push(text(x + 32, y, e.name, { "font-size": "12" }));
    y += 18;
  }
}

function lbConstantOf(rows: ResultRow[]): number {
  const constants = uniqueSorted(rows.map((r) => r.lbConstant));
  if (constants.length > 1) {
    throw new FigureError(`rows carry inconsistent lb_constant values: ${constants.join(", ")}`);
  }
  return constants[0]!;
}

/** Regret vs horizon, one curve per algorithm, lower-bound overlay when the
 * constant is positive. Rows must share instance and c. */
export function buildRegretVsT(rows: ResultRow[], spec: FigureSpec): string {
  const selected = selectRows(rows, spec);
  const cs = uniqueSorted(selected.map((r) => r.c));
  if (cs.length > 1) {
    throw new FigureError(`vs-t rows must share c, got ${cs.join(", ")}`);
  }
  const metric = spec.metric ?? "pseudo";
  const series = groupSeries(selected, (r) => r.t, metric);
  const lbConst = lbConstantOf(selected);

  const ts = uniqueSorted(selected.map((r) => r.t));
  const tMin = ts[0]!;
  const tMax = ts[ts.length - 1]!;
  let yMax = 0;
  for (const s of series) {
    for (const p of s.points) yMax = Math.max(yMax, p.mean + p.std);
  }
  const instance = selected[0]!.instance;
  const f = frame(
    spec,
    [tMin, tMax],
    yMax,
    "time horizon t",
    `${metric} regret`,
    `${instance}: regret vs horizon (c = ${label(cs[0]!)})`,
  );

  if (lbConst > 0) {
    const overlay: Array<[number, number]> = [];
    const steps = 120;
    for (let i = 0; i <= steps; i++) {
      const t = spec.logX
        ? tMin * Math.pow(tMax / tMin, i / steps)
        : tMin + ((tMax - tMin) * i) / steps;
      overlay.push([f.xScale(t), f.yScale(lbConst * Math.log(t))]);
    }
    f.body.push(
      polyline(overlay, {
        stroke: LB_COLOR,
        "stroke-width": "1.5",
        "stroke-dasharray": "6 3",
        "data-lb-overlay": String(lbConst),
      }),
    );
  }
  drawSeries(f, series);
  const legend: Array<{ name: string; color: string; dashed?: boolean }> = series.map(
    (s, i) => ({ name: s.algorithm, color: PALETTE[i % PALETTE.length]! }),
  );
  if (lbConst > 0) {
    legend.push({ name: "asymptotic lower bound", color: LB_COLOR, dashed: true });
  }
  drawLegend(f, legend);
  return svgDocument(f.width, f.height, f.body);
}

/** Regret at a fixed horizon against the abstention parameter c, one
 * error-barred series per algorithm. Rows must share instance and t. */
export function buildRegretVsC(rows: ResultRow[], spec: FigureSpec): string {
  const selected = selectRows(rows, spec);
  const ts = uniqueSorted(selected.map((r) => r.t));
  if (ts.length > 1) {
    throw new FigureError(`vs-c rows must share the horizon, got t in {${ts.join(", ")}}`);
  }
  const metric = spec.metric ?? "pseudo";
  const series = groupSeries(selected, (r) => r.c, metric);
  const cs = uniqueSorted(selected.map((r) => r.c));
  let yMax = 0;
  for (const s of series) {
    for (const p of s.points) yMax = Math.max(yMax, p.mean + p.std);
  }
  const instance = selected[0]!.instance;
  const f = frame(
    spec,
    [cs[0]!, cs[cs.length - 1]!],
    yMax,
    "abstention parameter c",
    `${metric} regret at t = ${label(ts[0]!)}`,
    `${instance}: regret vs c`,
  );
  drawSeries(f, series);
  drawLegend(
    f,
    series.map((s, i) => ({ name: s.algorithm, color: PALETTE[i % PALETTE.length]! })),
  );
  return svgDocument(f.width, f.height, f.body);
}

export function buildFigure(rows: ResultRow[], spec: FigureSpec): string {
  return spec.kind === "vs-c" ? buildRegretVsC(rows, spec) : buildRegretVsT(rows, spec);
}
