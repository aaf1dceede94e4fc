/**
 * Minimal deterministic SVG scene builder: one x/y frame with ticks, a
 * legend, and whatever marks the figure adds.  The first child of the
 * root element is a <metadata> block holding the exact plotted values as
 * JSON, so consumers can recover the data without re-parsing the inputs.
 */

export const WIDTH = 760;
export const HEIGHT = 480;
export const MARGIN = { top: 44, right: 24, bottom: 56, left: 72 };

export const PALETTE = ["#1f6fb2", "#d1495b", "#3e8e5a", "#8a6fb8", "#c98a2b", "#5b5b5b"];

/** Recover the JSON block that render() embeds in a document. */
export function extractMetadata(svg: string): unknown {
  const start = svg.indexOf("<metadata>");
  const end = svg.indexOf("</metadata>");
  if (start < 0 || end < 0) {
    throw new Error("document has no metadata block");
  }
  return JSON.parse(svg.slice(start + "<metadata>".length, end));
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// JSON never has <, >, & outside string values, and \uXXXX escapes parse
// back to the same string, so this keeps the block valid XML text.
function jsonForXml(value: unknown): string {
  return JSON.stringify(value)
    .replace(/&/g, "\\u0026")
    .replace(/</g, "\\u003c")
    .replace(/>/g, "\\u003e");
}

function round2(x: number): string {
  return (Math.round(x * 100) / 100).toString();
}

export function formatTick(x: number): string {
  if (x === 0) return "0";
  if (Math.abs(x) >= 1e4 && Number.isInteger(x / 1e3)) return `${x / 1e3}k`;
  if (Number.isInteger(x)) return String(x);
  return String(Number(x.toPrecision(3)));
}

/** Tick positions on a 1-2-5 ladder covering [lo, hi]. */
export function niceTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / count;
  const magnitude = 10 ** Math.floor(Math.log10(rawStep));
  const residual = rawStep / magnitude;
  const step = magnitude * (residual < 1.5 ? 1 : residual < 3.5 ? 2 : residual < 7.5 ? 5 : 10);
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

export interface Scale {
  map(x: number): number;
  ticks: number[];
}

interface LegendEntry {
  label: string;
  color: string;
  dash?: string;
}

/** One framed plot; marks accumulate, render() assembles the document. */
export class Figure {
  private readonly parts: string[] = [];
  private readonly legendEntries: LegendEntry[] = [];
  x!: Scale;
  y!: Scale;

  constructor(
    private readonly title: string,
    private readonly xLabel: string,
    private readonly yLabel: string,
  ) {}

  /** Map [lo, hi] onto the horizontal frame, optionally log-positioned. */
  setX(lo: number, hi: number, opts: { log?: boolean; ticks?: number[] } = {}): void {
    const t = opts.log ? (x: number) => Math.log(x) : (x: number) => x;
    const [a, b] = [t(lo), t(hi)];
    const span = b > a ? b - a : 1;
    this.x = {
      map: (x) => MARGIN.left + ((t(x) - a) / span) * (WIDTH - MARGIN.left - MARGIN.right),
      ticks: opts.ticks ?? niceTicks(lo, hi),
    };
  }

  /** Map [lo, hi] onto the vertical frame, zero at the bottom axis. */
  setY(lo: number, hi: number, opts: { ticks?: number[] } = {}): void {
    const span = hi > lo ? hi - lo : 1;
    this.y = {
      map: (y) => HEIGHT - MARGIN.bottom - ((y - lo) / span) * (HEIGHT - MARGIN.top - MARGIN.bottom),
      ticks: opts.ticks ?? niceTicks(lo, hi),
    };
  }

  line(xs: number[], ys: number[], color: string, opts: { dash?: string; width?: number } = {}): void {
    const points = xs.map((x, i) => `${round2(this.x.map(x))},${round2(this.y.map(ys[i]))}`);
    const dash = opts.dash ? ` stroke-dasharray="${opts.dash}"` : "";
    this.parts.push(
      `<polyline points="${points.join(" ")}" fill="none" stroke="${color}"` +
        ` stroke-width="${opts.width ?? 1.8}"${dash}/>`,
    );
  }

  /** Shaded region between two series sharing the x grid. */
  band(xs: number[], lo: number[], hi: number[], color: string): void {
    const upper = xs.map((x, i) => `${round2(this.x.map(x))},${round2(this.y.map(hi[i]))}`);
    const lower = xs
      .map((x, i) => `${round2(this.x.map(x))},${round2(this.y.map(lo[i]))}`)
      .reverse();
    this.parts.push(
      `<polygon points="${[...upper, ...lower].join(" ")}" fill="${color}"` +
        ` fill-opacity="0.16" stroke="none"/>`,
    );
  }

  dot(x: number, y: number, color: string): void {
    this.parts.push(
      `<circle cx="${round2(this.x.map(x))}" cy="${round2(this.y.map(y))}" r="3.5" fill="${color}"/>`,
    );
  }

  /** Vertical bar from the x axis; x0/x1 are data-space edges. */
  bar(x0: number, x1: number, y: number, color: string): void {
    const left = this.x.map(x0);
    const top = this.y.map(y);
    const bottom = this.y.map(0);
    this.parts.push(
      `<rect x="${round2(left)}" y="${round2(top)}" width="${round2(this.x.map(x1) - left)}"` +
        ` height="${round2(bottom - top)}" fill="${color}" fill-opacity="0.75"/>`,
    );
  }

  /** Short horizontal marker, used for per-bar cap levels. */
  capTick(x0: number, x1: number, y: number, color: string): void {
    const py = round2(this.y.map(y));
    this.parts.push(
      `<line x1="${round2(this.x.map(x0))}" y1="${py}" x2="${round2(this.x.map(x1))}" y2="${py}"` +
        ` stroke="${color}" stroke-width="2" stroke-dasharray="4 2"/>`,
    );
  }

  legend(label: string, color: string, dash?: string): void {
    this.legendEntries.push({ label, color, dash });
  }

  render(meta: unknown): string {
    const innerRight = WIDTH - MARGIN.right;
    const innerBottom = HEIGHT - MARGIN.bottom;
    const out: string[] = [
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}"` +
        ` viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
      `<metadata>${jsonForXml(meta)}</metadata>`,
      `<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
      `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="15">${escapeXml(this.title)}</text>`,
    ];
    for (const v of this.x.ticks) {
      const px = round2(this.x.map(v));
      out.push(
        `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${innerBottom}" stroke="#dddddd"/>`,
        `<text x="${px}" y="${innerBottom + 18}" text-anchor="middle" font-size="11">` +
          `${escapeXml(formatTick(v))}</text>`,
      );
    }
    for (const v of this.y.ticks) {
      const py = round2(this.y.map(v));
      out.push(
        `<line x1="${MARGIN.left}" y1="${py}" x2="${innerRight}" y2="${py}" stroke="#dddddd"/>`,
        `<text x="${MARGIN.left - 8}" y="${py}" text-anchor="end" dominant-baseline="middle"` +
          ` font-size="11">${escapeXml(formatTick(v))}</text>`,
      );
    }
    out.push(
      `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${innerRight - MARGIN.left}"` +
        ` height="${innerBottom - MARGIN.top}" fill="none" stroke="#444444"/>`,
      `<text x="${(MARGIN.left + innerRight) / 2}" y="${HEIGHT - 14}" text-anchor="middle"` +
        ` font-size="12">${escapeXml(this.xLabel)}</text>`,
      `<text x="20" y="${(MARGIN.top + innerBottom) / 2}" text-anchor="middle" font-size="12"` +
        ` transform="rotate(-90 20 ${(MARGIN.top + innerBottom) / 2})">${escapeXml(this.yLabel)}</text>`,
      ...this.parts,
    );
    this.legendEntries.forEach((entry, i) => {
      const y = MARGIN.top + 16 + i * 18;
      const dash = entry.dash ? ` stroke-dasharray="${entry.dash}"` : "";
      out.push(
        `<line x1="${MARGIN.left + 10}" y1="${y}" x2="${MARGIN.left + 34}" y2="${y}"` +
          ` stroke="${entry.color}" stroke-width="2.5"${dash}/>`,
        `<text x="${MARGIN.left + 40}" y="${y + 4}" font-size="12">${escapeXml(entry.label)}</text>`,
      );
    });
    out.push("</svg>");
    return out.join("\n") + "\n";
  }
}
