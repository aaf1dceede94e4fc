/**
 * Wire formats consumed from the experiment harness, and the figure spec
 * built on top of them.  Only the fields the figures actually read are
 * typed; everything else rides along as unknown.
 */

export interface RunRecord {
  algorithm: string;
  seed_index: number;
  csv: string;
  n: number;
  final_regret: number;
  pre_stage3_rounds: number;
  budget_caps: Record<string, number>;
  curve: number[];
  [extra: string]: unknown;
}

export interface AlgorithmSummary {
  run_count: number;
  mean_final_regret: number;
  mean_curve: number[];
  min_curve: number[];
  max_curve: number[];
  runs: RunRecord[];
  [extra: string]: unknown;
}

export interface Summary {
  experiment: {
    generator: { n: number; [extra: string]: unknown };
    seeds: number[];
    [extra: string]: unknown;
  };
  curve_grid: number[];
  algorithms: Record<string, AlgorithmSummary>;
  [extra: string]: unknown;
}

/** A single-run CSV reduced to the columns the curve figure plots. */
export interface RunColumn {
  runId: string;
  t: number[];
  cumRegret: number[];
}

export type FigureKind = "regret_curve" | "scaling" | "budgets";

export interface PlotSpec {
  kind: FigureKind;
  inputs: string[];
  out: string;
  logX: boolean;
}

/** An input that exists but does not match the harness schemas. */
export class SchemaMismatch extends Error {
  readonly column: string;

  constructor(column: string, detail: string) {
    super(`schema mismatch at ${column}: ${detail}`);
    this.name = "SchemaMismatch";
    this.column = column;
  }
}
