/**
 * Minimal deterministic SVG scene builder: fixed canvas, no timestamps,
 * numbers formatted to a fixed precision so re-rendering the same rows
 * yields an identical byte stream.
 */

export const WIDTH = 640;
export const HEIGHT = 420;
export const MARGIN = { top: 40, right: 24, bottom: 48, left: 60 };

export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

export function fmt(value: number): string {
  // Fixed precision keeps output stable; strip the trailing zeros that
  // would otherwise bloat coordinates.
  const s = value.toFixed(3);
  return s.replace(/\.?0+$/, "") || "0";
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface Scale {
  (value: number): number;
  domain: [number, number];
  ticks(count: number): number[];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.ticks = (count: number) => {
    const step = niceStep(span / Math.max(1, count));
    const start = Math.ceil(d0 / step) * step;
    const ticks: number[] = [];
    for (let v = start; v <= d1 + step * 1e-9; v += step) {
      ticks.push(Math.round(v / step) * step);
    }
    return ticks;
  };
  return scale;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0 || 1;
  const scale = ((value: number) => r0 + ((Math.log10(value) - l0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.ticks = () => {
    const ticks: number[] = [];
    for (let e = Math.ceil(l0); e <= Math.log10(d1) + 1e-9; e++) {
      ticks.push(10 ** e);
    }
    return ticks.length >= 2 ? ticks : [d0, d1];
  };
  return scale;
}

function niceStep(raw: number): number {
  const mag = 10 ** Math.floor(Math.log10(raw));
  const ratio = raw / mag;
  if (ratio <= 1) return mag;
  if (ratio <= 2) return 2 * mag;
  if (ratio <= 5) return 5 * mag;
  return 10 * mag;
}

export class Svg {
  private parts: string[] = [];

  constructor(title: string) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
        `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="monospace" font-size="12">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
      `<text x="${WIDTH / 2}" y="22" text-anchor="middle" font-size="15">` +
        `${escapeXml(title)}</text>`,
    );
  }

  raw(element: string): void {
    this.parts.push(element);
  }

  line(x1: number, y1: number, x2: number, y2: number, attrs = ""): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}"${attrs}/>`,
    );
  }

  polyline(points: Array<[number, number]>, color: string, attrs = ""): void {
    const path = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polyline points="${path}" fill="none" stroke="${color}" stroke-width="1.5"${attrs}/>`,
    );
  }

  circle(x: number, y: number, r: number, color: string, attrs = ""): void {
    this.parts.push(
      `<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${fmt(r)}" fill="${color}"${attrs}/>`,
    );
  }

  text(x: number, y: number, content: string, attrs = ""): void {
    this.parts.push(`<text x="${fmt(x)}" y="${fmt(y)}"${attrs}>${escapeXml(content)}</text>`);
  }

  axes(xScale: Scale, yScale: Scale, xLabel: string, yLabel: string, xTicks = 6, yTicks = 6): void {
    const x0 = MARGIN.left;
    const x1 = WIDTH - MARGIN.right;
    const y0 = HEIGHT - MARGIN.bottom;
    const y1 = MARGIN.top;
    this.line(x0, y0, x1, y0, ' stroke="black"');
    this.line(x0, y0, x0, y1, ' stroke="black"');
    for (const tick of xScale.ticks(xTicks)) {
      const x = xScale(tick);
      this.line(x, y0, x, y0 + 4, ' stroke="black"');
      this.text(x, y0 + 18, trimTick(tick), ' text-anchor="middle"');
    }
    for (const tick of yScale.ticks(yTicks)) {
      const y = yScale(tick);
      this.line(x0 - 4, y, x0, y, ' stroke="black"');
      this.text(x0 - 8, y + 4, trimTick(tick), ' text-anchor="end"');
    }
    this.text((x0 + x1) / 2, HEIGHT - 12, xLabel, ' text-anchor="middle"');
    this.text(16, (y0 + y1) / 2, yLabel, ` text-anchor="middle" transform="rotate(-90 16 ${(y0 + y1) / 2})"`);
  }

  legend(entries: Array<{ label: string; color: string }>): void {
    const x = WIDTH - MARGIN.right - 150;
    entries.forEach((entry, i) => {
      const y = MARGIN.top + 14 + 16 * i;
      this.line(x, y - 4, x + 18, y - 4, ` stroke="${entry.color}" stroke-width="2"`);
      this.text(x + 24, y, entry.label);
    });
  }

  render(): string {
    return [...this.parts, "</svg>", ""].join("\n");
  }
}

function trimTick(value: number): string {
  if (Math.abs(value) >= 1000 || (value !== 0 && Math.abs(value) < 0.001)) {
    return value.toExponential(0);
  }
  return fmt(value);
}
