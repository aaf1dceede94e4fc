import * as fs from "node:fs";
import * as path from "node:path";

import { afterEach, beforeEach, expect, it } from "vitest";

import { readRunCsv, readSummary } from "../src/schema";
import { SchemaMismatch } from "../src/types";
import { makeSummary, tempDir, writeRunCsv, writeSummary } from "./helpers";

let dir: string;

beforeEach(() => {
  dir = tempDir();
});

afterEach(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

it("accepts a well-formed summary", () => {
  const summary = readSummary(writeSummary(dir, 8));
  expect(Object.keys(summary.algorithms).sort()).toEqual(["plain", "staged"]);
  expect(summary.curve_grid).toEqual([1, 2, 4, 8]);
  expect(summary.experiment.generator.n).toBe(8);
});

it("rejects an empty seed list, naming the key", () => {
  const file = writeSummary(dir, 8, (doc) => {
    doc.experiment.seeds = [];
  });
  expect(() => readSummary(file)).toThrowError(SchemaMismatch);
  expect(() => readSummary(file)).toThrowError(/experiment\.seeds/);
});

it("rejects a summary missing its algorithms table", () => {
  const file = writeSummary(dir, 8, (doc) => {
    delete doc.algorithms;
  });
  expect(() => readSummary(file)).toThrowError(/algorithms/);
});

it("rejects curves that disagree with the grid length", () => {
  const file = writeSummary(dir, 8, (doc) => {
    doc.algorithms.staged.mean_curve = [0, 1];
  });
  expect(() => readSummary(file)).toThrowError(/mean_curve/);
});

it("rejects a file that is not JSON", () => {
  const file = path.join(dir, "junk.json");
  fs.writeFileSync(file, "not json");
  expect(() => readSummary(file)).toThrowError(SchemaMismatch);
});

it("reads the plotted columns of a run CSV", () => {
  const run = readRunCsv(writeRunCsv(dir));
  expect(run.runId).toBe("demo-s0");
  expect(run.t).toEqual(Array.from({ length: 16 }, (_, i) => i + 1));
  expect(run.cumRegret).toHaveLength(16);
});

it("names a missing CSV column", () => {
  const file = path.join(dir, "bad.csv");
  fs.writeFileSync(file, "run_id,t,reward\ndemo,1,0.5\n");
  expect(() => readRunCsv(file)).toThrowError(/cum_regret/);
});

it("round-trips every summary number it validates", () => {
  const doc = makeSummary(8);
  const summary = readSummary(writeSummary(dir, 8));
  expect(summary.algorithms.staged.mean_curve).toEqual(doc.algorithms.staged.mean_curve);
  expect(summary.algorithms.plain.mean_final_regret).toBe(
    doc.algorithms.plain.mean_final_regret,
  );
});
