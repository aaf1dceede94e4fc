/**
 * Readers for the two harness artifacts: the per-experiment summary.json
 * and the per-run CSV.  Every violation raises SchemaMismatch naming the
 * offending column or key; nothing here mutates the inputs.
 */

import * as fs from "node:fs";

import { AlgorithmSummary, RunColumn, RunRecord, SchemaMismatch, Summary } from "./types";

function asObject(value: unknown, column: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new SchemaMismatch(column, "expected a JSON object");
  }
  return value as Record<string, unknown>;
}

function asNumber(value: unknown, column: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new SchemaMismatch(column, "expected a finite number");
  }
  return value;
}

function asNumberArray(value: unknown, column: string, length?: number): number[] {
  if (!Array.isArray(value)) {
    throw new SchemaMismatch(column, "expected an array of numbers");
  }
  if (length !== undefined && value.length !== length) {
    throw new SchemaMismatch(column, `expected ${length} entries, found ${value.length}`);
  }
  for (const entry of value) {
    if (typeof entry !== "number" || !Number.isFinite(entry)) {
      throw new SchemaMismatch(column, "expected a finite number in the array");
    }
  }
  return value as number[];
}

function parseRun(value: unknown, column: string, curvePoints: number): RunRecord {
  const run = asObject(value, column);
  if (typeof run.algorithm !== "string") {
    throw new SchemaMismatch(`${column}.algorithm`, "expected a string");
  }
  asNumber(run.seed_index, `${column}.seed_index`);
  asNumber(run.final_regret, `${column}.final_regret`);
  asNumber(run.pre_stage3_rounds, `${column}.pre_stage3_rounds`);
  const caps = asObject(run.budget_caps ?? {}, `${column}.budget_caps`);
  for (const [name, cap] of Object.entries(caps)) {
    asNumber(cap, `${column}.budget_caps.${name}`);
  }
  asNumberArray(run.curve, `${column}.curve`, curvePoints);
  return run as unknown as RunRecord;
}

function parseAlgorithm(value: unknown, column: string, curvePoints: number): AlgorithmSummary {
  const agg = asObject(value, column);
  asNumber(agg.run_count, `${column}.run_count`);
  asNumber(agg.mean_final_regret, `${column}.mean_final_regret`);
  asNumberArray(agg.mean_curve, `${column}.mean_curve`, curvePoints);
  asNumberArray(agg.min_curve, `${column}.min_curve`, curvePoints);
  asNumberArray(agg.max_curve, `${column}.max_curve`, curvePoints);
  if (!Array.isArray(agg.runs)) {
    throw new SchemaMismatch(`${column}.runs`, "expected an array of run records");
  }
  agg.runs.forEach((run, i) => parseRun(run, `${column}.runs[${i}]`, curvePoints));
  return agg as unknown as AlgorithmSummary;
}

/** Load and validate a summary.json produced by the harness. */
export function readSummary(path: string): Summary {
  let raw: unknown;
  try {
    raw = JSON.parse(fs.readFileSync(path, "utf-8"));
  } catch (err) {
    throw new SchemaMismatch(path, `not valid JSON (${(err as Error).message})`);
  }
  const doc = asObject(raw, path);
  for (const key of ["experiment", "curve_grid", "algorithms"]) {
    if (!(key in doc)) {
      throw new SchemaMismatch(key, `missing from ${path}`);
    }
  }
  const experiment = asObject(doc.experiment, "experiment");
  const generator = asObject(experiment.generator, "experiment.generator");
  asNumber(generator.n, "experiment.generator.n");
  const seeds = experiment.seeds;
  if (!Array.isArray(seeds) || seeds.length === 0) {
    throw new SchemaMismatch("experiment.seeds", "expected a non-empty seed list");
  }
  const grid = asNumberArray(doc.curve_grid, "curve_grid");
  const algorithms = asObject(doc.algorithms, "algorithms");
  for (const [name, agg] of Object.entries(algorithms)) {
    parseAlgorithm(agg, `algorithms.${name}`, grid.length);
  }
  return doc as unknown as Summary;
}

const REQUIRED_CSV = ["run_id", "t", "cum_regret"];

/** Load the plotted columns of one run CSV written by the harness. */
export function readRunCsv(path: string): RunColumn {
  const text = fs.readFileSync(path, "utf-8");
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new SchemaMismatch("t", `no data rows in ${path}`);
  }
  const header = lines[0].split(",");
  const index: Record<string, number> = {};
  header.forEach((name, i) => {
    index[name] = i;
  });
  for (const name of REQUIRED_CSV) {
    if (!(name in index)) {
      throw new SchemaMismatch(name, `column missing from ${path}`);
    }
  }
  const t: number[] = [];
  const cumRegret: number[] = [];
  let runId = "";
  for (const line of lines.slice(1)) {
    const cells = line.split(",");
    runId = cells[index.run_id];
    const round = Number(cells[index.t]);
    const regret = Number(cells[index.cum_regret]);
    if (!Number.isFinite(round)) {
      throw new SchemaMismatch("t", `non-numeric value ${cells[index.t]!} in ${path}`);
    }
    if (!Number.isFinite(regret)) {
      throw new SchemaMismatch("cum_regret", `non-numeric value ${cells[index.cum_regret]!} in ${path}`);
    }
    t.push(round);
    cumRegret.push(regret);
  }
  return { runId, t, cumRegret };
}
