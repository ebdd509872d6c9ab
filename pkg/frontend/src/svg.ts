/** Tiny deterministic SVG string builder: fixed attribute order, fixed
 * number formatting, no timestamps or randomness anywhere. */

export function fmt(x: number): string {
  if (!Number.isFinite(x)) throw new Error(`non-finite coordinate: ${x}`);
  const s = x.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

/** Compact tick/legend label. */
export function label(x: number): string {
  if (Number.isInteger(x)) {
    return Math.abs(x) >= 10000 ? x.toExponential(0).replace("+", "") : String(x);
  }
  return String(Math.round(x * 1000) / 1000);
}

export function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(name: string, attrs: Record<string, string>, body?: string): string {
  const parts = Object.entries(attrs).map(([k, v]) => `${k}="${v}"`);
  const head = parts.length ? `${name} ${parts.join(" ")}` : name;
  return body === undefined ? `<${head}/>` : `<${head}>${body}</${name}>`;
}

export function text(x: number, y: number, content: string, attrs: Record<string, string> = {}): string {
  return tag("text", { x: fmt(x), y: fmt(y), ...attrs }, escapeXml(content));
}

export function line(x1: number, y1: number, x2: number, y2: number, attrs: Record<string, string>): string {
  return tag("line", { x1: fmt(x1), y1: fmt(y1), x2: fmt(x2), y2: fmt(y2), ...attrs });
}

export function polyline(points: Array<[number, number]>, attrs: Record<string, string>): string {
  const pts = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return tag("polyline", { points: pts, fill: "none", ...attrs });
}

export function svgDocument(width: number, height: number, body: string[]): string {
  const open = tag(
    "svg",
    {
      xmlns: "http://www.w3.org/2000/svg",
      width: String(width),
      height: String(height),
      viewBox: `0 0 ${width} ${height}`,
      "font-family": "Helvetica, Arial, sans-serif",
    },
    body.join("\n"),
  );
  return `<?xml version="1.0" encoding="UTF-8"?>\n${open}\n`;
}
