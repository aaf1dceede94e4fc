/**
 * The three figure kinds.  Every series that lands on the canvas is also
 * written verbatim into the document's <metadata> block; the drawing is a
 * projection of those values, never a transformation of them.
 */

import * as path from "node:path";

import { readRunCsv, readSummary } from "./schema";
import { Figure, PALETTE } from "./svg";
import { PlotSpec, SchemaMismatch, Summary } from "./types";

interface CurveSeries {
  mean: number[];
  min: number[];
  max: number[];
}

function curveInputs(input: string): { t: number[]; series: Record<string, CurveSeries> } {
  if (path.extname(input) === ".csv") {
    const run = readRunCsv(input);
    const column = { mean: run.cumRegret, min: run.cumRegret, max: run.cumRegret };
    return { t: run.t, series: { [run.runId]: column } };
  }
  const summary = readSummary(input);
  const series: Record<string, CurveSeries> = {};
  for (const name of Object.keys(summary.algorithms).sort()) {
    const agg = summary.algorithms[name];
    series[name] = { mean: agg.mean_curve, min: agg.min_curve, max: agg.max_curve };
  }
  return { t: summary.curve_grid, series };
}

function buildRegretCurve(input: string, logX: boolean): string {
  const { t, series } = curveInputs(input);
  const names = Object.keys(series);
  const top = Math.max(...names.map((name) => Math.max(...series[name].max)));
  const fig = new Figure("Cumulative regret", "round t", "cumulative regret");
  fig.setX(logX ? Math.max(t[0], 1) : t[0], t[t.length - 1], { log: logX });
  fig.setY(0, top);
  names.forEach((name, i) => {
    const color = PALETTE[i % PALETTE.length];
    fig.band(t, series[name].min, series[name].max, color);
    fig.line(t, series[name].mean, color);
    fig.legend(name, color);
  });
  return fig.render({ kind: "regret_curve", t, series });
}

function buildScaling(inputs: string[], logX: boolean): string {
  const summaries = inputs
    .map(readSummary)
    .sort((a, b) => a.experiment.generator.n - b.experiment.generator.n);
  const points: Record<string, Record<string, number>> = {};
  const names = new Set<string>();
  for (const summary of summaries) {
    const point: Record<string, number> = {};
    for (const [name, agg] of Object.entries(summary.algorithms)) {
      point[name] = agg.mean_final_regret;
      names.add(name);
    }
    points[String(summary.experiment.generator.n)] = point;
  }
  const ns = summaries.map((s) => s.experiment.generator.n);
  const [n0, n1] = [ns[0], ns[ns.length - 1]];

  // reference shapes anchored at the cross-algorithm mean at the smallest n
  const guides: { label: string; xs: number[]; ys: number[] }[] = [];
  if (n1 > n0 && n0 >= 2) {
    const first = Object.values(points[String(n0)]);
    const y0 = first.reduce((a, b) => a + b, 0) / first.length;
    const xs = Array.from({ length: 64 }, (_, i) => n0 + ((n1 - n0) * i) / 63);
    guides.push(
      { label: "shape: log n", xs, ys: xs.map((n) => (y0 * Math.log2(n)) / Math.log2(n0)) },
      { label: "shape: sqrt n", xs, ys: xs.map((n) => y0 * Math.sqrt(n / n0)) },
    );
  }

  let top = Math.max(...Object.values(points).flatMap((p) => Object.values(p)));
  for (const guide of guides) top = Math.max(top, ...guide.ys);
  const fig = new Figure("Final regret against instance size", "nodes n", "mean final regret");
  fig.setX(n0, n1, { log: logX, ticks: ns });
  fig.setY(0, top);
  [...names].sort().forEach((name, i) => {
    const color = PALETTE[i % PALETTE.length];
    const xs = ns.filter((n) => name in points[String(n)]);
    const ys = xs.map((n) => points[String(n)][name]);
    fig.line(xs, ys, color);
    xs.forEach((x, j) => fig.dot(x, ys[j], color));
    fig.legend(name, color);
  });
  guides.forEach((guide, i) => {
    const color = PALETTE[(PALETTE.length - 1 - i) % PALETTE.length];
    fig.line(guide.xs, guide.ys, color, { dash: "6 3", width: 1.2 });
    fig.legend(guide.label, color, "6 3");
  });
  return fig.render({ kind: "scaling", points });
}

function buildBudgets(input: string): string {
  const summary: Summary = readSummary(input);
  const staged = Object.keys(summary.algorithms)
    .sort()
    .flatMap((name) => summary.algorithms[name].runs)
    .filter((run) => Object.keys(run.budget_caps).length > 0)
    .sort((a, b) =>
      a.algorithm === b.algorithm ? a.seed_index - b.seed_index : a.algorithm < b.algorithm ? -1 : 1,
    );
  if (staged.length === 0) {
    throw new SchemaMismatch("budget_caps", "no run carries exploration caps; nothing to plot");
  }
  const top = Math.max(
    ...staged.map((run) => Math.max(run.pre_stage3_rounds, ...Object.values(run.budget_caps))),
  );
  const fig = new Figure(
    "Identification rounds against their caps",
    "run",
    "rounds before the final stage",
  );
  fig.setX(0, staged.length);
  fig.setY(0, top);
  const algoColor = new Map<string, string>();
  staged.forEach((run, i) => {
    if (!algoColor.has(run.algorithm)) {
      const color = PALETTE[algoColor.size % PALETTE.length];
      algoColor.set(run.algorithm, color);
      fig.legend(run.algorithm, color);
    }
    fig.bar(i + 0.15, i + 0.85, run.pre_stage3_rounds, algoColor.get(run.algorithm)!);
    fig.capTick(i + 0.05, i + 0.95, Math.max(...Object.values(run.budget_caps)), "#222222");
  });
  fig.legend("cap", "#222222", "4 2");
  const runs = staged.map((run) => ({
    algorithm: run.algorithm,
    seed_index: run.seed_index,
    pre_stage3_rounds: run.pre_stage3_rounds,
    caps: run.budget_caps,
  }));
  return fig.render({ kind: "budgets", runs });
}

/** Render the requested figure to an SVG document string. */
export function buildFigure(spec: PlotSpec): string {
  switch (spec.kind) {
    case "regret_curve":
      return buildRegretCurve(spec.inputs[0], spec.logX);
    case "scaling":
      return buildScaling(spec.inputs, spec.logX);
    case "budgets":
      return buildBudgets(spec.inputs[0]);
  }
}
