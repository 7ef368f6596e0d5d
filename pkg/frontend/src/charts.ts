/**
 * Chart renderers. Each one is a pure function of the parsed CSV rows and
 * returns an SVG string; nothing here touches the clock or the filesystem.
 */

import { Row, SchemaError, distinct, groupBy } from "./schema";
import { HEIGHT, MARGIN, PALETTE, Svg, WIDTH, linearScale, logScale } from "./svg";

export const CHART_KINDS = [
  "detection-curve",
  "budget-curve",
  "false-reject-decay",
  "density-scatter",
] as const;

export type ChartKind = (typeof CHART_KINDS)[number];

export interface PlotJob {
  rows: Row[];
  kind: ChartKind;
  title?: string;
}

const PLOT_X: [number, number] = [MARGIN.left, WIDTH - MARGIN.right];
const PLOT_Y: [number, number] = [HEIGHT - MARGIN.bottom, MARGIN.top];

function epsLabel(row: Row): string {
  return `${row.epsNum}/${row.epsDen}`;
}

function seriesColor(i: number): string {
  return PALETTE[i % PALETTE.length];
}

/**
 * Detection probability vs the confidence parameter c, one series per
 * (h, w, eps) grid slice, with the 1 - e^-c target per c. Each target
 * marker carries its value in a data-target attribute.
 */
export function detectionCurve(rows: Row[], title: string): string {
  const cs = distinct(rows, (r) => r.c);
  const svg = new Svg(title);
  const xScale = linearScale([Math.min(0, cs[0]), cs[cs.length - 1]], PLOT_X);
  const yScale = linearScale([0, 1], PLOT_Y);
  svg.axes(xScale, yScale, "c", "detection probability");

  const targets: Array<[number, number]> = cs.map((c) => [c, 1 - Math.exp(-c)]);
  svg.polyline(
    targets.map(([c, t]) => [xScale(c), yScale(t)]),
    "#555555",
    ' stroke-dasharray="5,3" class="target-line"',
  );
  for (const [c, target] of targets) {
    svg.circle(
      xScale(c),
      yScale(target),
      3,
      "#555555",
      ` class="target" data-c="${c}" data-target="${target.toFixed(6)}"`,
    );
  }

  const groups = groupBy(rows, (r) => `h=${r.h} w=${r.w} eps=${epsLabel(r)}`);
  const legend: Array<{ label: string; color: string }> = [];
  let i = 0;
  for (const [label, group] of groups) {
    const color = seriesColor(i++);
    const points = [...group].sort((a, b) => a.c - b.c);
    svg.polyline(points.map((r) => [xScale(r.c), yScale(r.observed)]), color);
    for (const r of points) {
      svg.circle(xScale(r.c), yScale(r.observed), 3, color, ` data-observed="${r.observed}"`);
    }
    legend.push({ label, color });
  }
  legend.push({ label: "target 1-e^-c", color: "#555555" });
  svg.legend(legend);
  return svg.render();
}

/** Worst observed removal budget fraction vs eps, with the eps threshold. */
export function budgetCurve(rows: Row[], title: string): string {
  const eps = distinct(rows, (r) => r.eps);
  const top = Math.max(...rows.map((r) => Math.max(r.observed, r.bound)), 1e-9);
  const svg = new Svg(title);
  const xScale = linearScale([0, eps[eps.length - 1]], PLOT_X);
  const yScale = linearScale([0, top * 1.05], PLOT_Y);
  svg.axes(xScale, yScale, "eps", "removed fraction of n^2");

  const groups = groupBy(rows, (r) => `h=${r.h}`);
  const legend: Array<{ label: string; color: string }> = [];
  let i = 0;
  for (const [label, group] of groups) {
    const color = seriesColor(i++);
    const points = [...group].sort((a, b) => a.eps - b.eps);
    svg.polyline(points.map((r) => [xScale(r.eps), yScale(r.observed)]), color);
    for (const r of points) {
      svg.circle(xScale(r.eps), yScale(r.observed), 3, color);
    }
    legend.push({ label, color });
  }
  const thresholds = rows
    .map((r) => [r.eps, r.bound] as [number, number])
    .sort((a, b) => a[0] - b[0]);
  svg.polyline(
    thresholds.map(([e, b]) => [xScale(e), yScale(b)]),
    "#555555",
    ' stroke-dasharray="5,3" class="threshold"',
  );
  legend.push({ label: "budget threshold", color: "#555555" });
  svg.legend(legend);
  return svg.render();
}

/**
 * False-reject rate vs n on log-log axes with a least-squares slope fit,
 * compared to the -1/(h w^2) decay rate the rate should not beat.
 */
export function falseRejectDecay(rows: Row[], title: string): string {
  const ns = distinct(rows, (r) => r.n);
  if (ns.length < 2) {
    throw new SchemaError("false-reject-decay needs at least two distinct n values");
  }
  const positive = rows.filter((r) => r.observed > 0);
  const floor = positive.length
    ? Math.min(...positive.map((r) => r.observed)) / 2
    : 1 / Math.max(...rows.map((r) => r.trials));
  const svg = new Svg(title);
  const xScale = logScale([ns[0], ns[ns.length - 1]], PLOT_X);
  const yScale = logScale([floor, 1], PLOT_Y);
  svg.axes(xScale, yScale, "n (log)", "false-reject rate (log)");

  const groups = groupBy(rows, (r) => `h=${r.h} w=${r.w} eps=${epsLabel(r)} c=${r.c}`);
  const legend: Array<{ label: string; color: string }> = [];
  let i = 0;
  for (const [label, group] of groups) {
    const color = seriesColor(i++);
    const points = [...group]
      .sort((a, b) => a.n - b.n)
      .map((r) => [r.n, Math.max(r.observed, floor)] as [number, number]);
    svg.polyline(points.map(([n, rate]) => [xScale(n), yScale(rate)]), color);
    for (const [n, rate] of points) {
      svg.circle(xScale(n), yScale(rate), 3, color);
    }
    const fitted = fitSlope(group.filter((r) => r.observed > 0));
    const target = -1 / (group[0].h * group[0].w * group[0].w);
    const note =
      fitted === null
        ? `slope n/a, target ${target.toFixed(4)}`
        : `slope ${fitted.toFixed(4)}, target ${target.toFixed(4)}`;
    svg.text(
      MARGIN.left + 8,
      MARGIN.top + 14 + 16 * (i - 1),
      `${label}: ${note}`,
      ` fill="${color}" data-slope="${fitted === null ? "" : fitted.toFixed(6)}"` +
        ` data-target-slope="${target.toFixed(6)}"`,
    );
    legend.push({ label, color });
  }
  return svg.render();
}

function fitSlope(rows: Row[]): number | null {
  if (rows.length < 2) return null;
  const xs = rows.map((r) => Math.log(r.n));
  const ys = rows.map((r) => Math.log(r.observed));
  const mx = xs.reduce((a, b) => a + b, 0) / xs.length;
  const my = ys.reduce((a, b) => a + b, 0) / ys.length;
  let num = 0;
  let den = 0;
  for (let i = 0; i < xs.length; i++) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) ** 2;
  }
  return den === 0 ? null : num / den;
}

/** Observed value against its per-row bound, with the y = x diagonal. */
export function densityScatter(rows: Row[], title: string): string {
  const top = Math.max(...rows.map((r) => Math.max(r.observed, r.bound)), 1e-9);
  const svg = new Svg(title);
  const xScale = linearScale([0, top * 1.05], PLOT_X);
  const yScale = linearScale([0, top * 1.05], PLOT_Y);
  svg.axes(xScale, yScale, "bound", "observed");
  svg.line(xScale(0), yScale(0), xScale(top), yScale(top), ' stroke="#555555" stroke-dasharray="5,3"');
  for (const r of rows) {
    const color = r.pass ? "#2ca02c" : "#d62728";
    svg.circle(xScale(r.bound), yScale(r.observed), 3.5, color, ` data-pass="${r.pass}"`);
  }
  svg.legend([
    { label: "pass", color: "#2ca02c" },
    { label: "fail", color: "#d62728" },
    { label: "observed = bound", color: "#555555" },
  ]);
  return svg.render();
}

export function render(job: PlotJob): string {
  if (job.rows.length === 0) {
    throw new SchemaError("no data rows to plot");
  }
  const title = job.title ?? `${job.rows[0].experiment} (${job.kind})`;
  switch (job.kind) {
    case "detection-curve":
      return detectionCurve(job.rows, title);
    case "budget-curve":
      return budgetCurve(job.rows, title);
    case "false-reject-decay":
      return falseRejectDecay(job.rows, title);
    case "density-scatter":
      return densityScatter(job.rows, title);
  }
}
