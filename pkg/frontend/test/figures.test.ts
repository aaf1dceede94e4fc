import * as fs from "node:fs";

import { afterEach, beforeEach, expect, it } from "vitest";

import { buildFigure } from "../src/figures";
import { extractMetadata } from "../src/svg";
import { SchemaMismatch } from "../src/types";
import { makeSummary, tempDir, writeRunCsv, writeSummary } from "./helpers";

let dir: string;

beforeEach(() => {
  dir = tempDir();
});

afterEach(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

function build(kind: "regret_curve" | "scaling" | "budgets", inputs: string[]): string {
  return buildFigure({ kind, inputs, out: "unused.svg", logX: false });
}

it("embeds the summary curves verbatim in the curve figure", () => {
  const doc = makeSummary(8);
  const svg = build("regret_curve", [writeSummary(dir, 8)]);
  const meta = extractMetadata(svg) as any;
  expect(meta.kind).toBe("regret_curve");
  expect(meta.t).toEqual(doc.curve_grid);
  for (const name of ["staged", "plain"]) {
    expect(meta.series[name].mean).toEqual(doc.algorithms[name].mean_curve);
    expect(meta.series[name].min).toEqual(doc.algorithms[name].min_curve);
    expect(meta.series[name].max).toEqual(doc.algorithms[name].max_curve);
  }
  // one band and one mean line per algorithm
  expect(svg.match(/<polygon/g)).toHaveLength(2);
  expect(svg.match(/<polyline/g)).toHaveLength(2);
});

it("renders a single-run CSV as a monotone degenerate band", () => {
  const svg = build("regret_curve", [writeRunCsv(dir)]);
  const meta = extractMetadata(svg) as any;
  const series = meta.series["demo-s0"];
  expect(series.min).toEqual(series.mean);
  expect(series.max).toEqual(series.mean);
  for (let i = 1; i < series.mean.length; i++) {
    expect(series.mean[i]).toBeGreaterThanOrEqual(series.mean[i - 1]);
  }
});

it("produces identical bytes on identical inputs", () => {
  const file = writeSummary(dir, 8);
  expect(build("regret_curve", [file])).toBe(build("regret_curve", [file]));
  expect(build("budgets", [file])).toBe(build("budgets", [file]));
});

it("plots one scaling point per algorithm and size", () => {
  const docs = [4, 8, 16].map((n) => makeSummary(n));
  const files = [16, 4, 8].map((n) => writeSummary(dir, n)); // order must not matter
  const svg = build("scaling", files);
  const meta = extractMetadata(svg) as any;
  expect(Object.keys(meta.points)).toEqual(["4", "8", "16"]);
  for (const doc of docs) {
    const point = meta.points[String(doc.experiment.generator.n)];
    expect(point.staged).toBe(doc.algorithms.staged.mean_final_regret);
    expect(point.plain).toBe(doc.algorithms.plain.mean_final_regret);
  }
  expect(svg.match(/<circle/g)).toHaveLength(6);
});

it("draws one budget bar per run that carries caps", () => {
  const svg = build("budgets", [writeSummary(dir, 8)]);
  const meta = extractMetadata(svg) as any;
  expect(meta.runs).toEqual([
    { algorithm: "staged", seed_index: 0, pre_stage3_rounds: 30, caps: { tree_cap: 48 } },
    { algorithm: "staged", seed_index: 1, pre_stage3_rounds: 35, caps: { tree_cap: 48 } },
  ]);
  // every bar carries a dashed cap marker
  expect(svg.match(/stroke-dasharray="4 2"/g)!.length).toBeGreaterThanOrEqual(2);
});

it("refuses a budgets figure when no run carries caps", () => {
  const file = writeSummary(dir, 8, (doc) => {
    for (const run of doc.algorithms.staged.runs) run.budget_caps = {};
  });
  expect(() => build("budgets", [file])).toThrowError(SchemaMismatch);
  expect(() => build("budgets", [file])).toThrowError(/budget_caps/);
});
