/** Self-contained fixtures shaped like the harness artifacts. */

import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

export function tempDir(): string {
  return fs.mkdtempSync(path.join(os.tmpdir(), "plots-"));
}

export function makeSummary(n: number): any {
  const grid = [1, 2, 4, 8];
  const algorithms: any = {};
  const cells: [string, number, Record<string, number>][] = [
    ["staged", 1.0, { tree_cap: 40 + n }],
    ["plain", 2.0, {}],
  ];
  for (const [name, scale, caps] of cells) {
    const runs = [0, 1].map((seed) => {
      const curve = grid.map((t) => scale * t * (seed + 1));
      return {
        algorithm: name,
        seed_index: seed,
        csv: `${name}-s${seed}.csv`,
        n,
        final_regret: curve[curve.length - 1],
        pre_stage3_rounds: 30 + 5 * seed,
        budget_caps: caps,
        curve,
      };
    });
    const finals = runs.map((r) => r.final_regret);
    algorithms[name] = {
      run_count: runs.length,
      mean_final_regret: finals.reduce((a, b) => a + b) / finals.length,
      mean_curve: grid.map((_, i) => runs.reduce((a, r) => a + r.curve[i], 0) / runs.length),
      min_curve: grid.map((_, i) => Math.min(...runs.map((r) => r.curve[i]))),
      max_curve: grid.map((_, i) => Math.max(...runs.map((r) => r.curve[i]))),
      runs,
    };
  }
  return {
    experiment: { generator: { family: "tree", n }, seeds: [0, 1], horizon: 8 },
    curve_grid: grid,
    algorithms,
    errors: [],
  };
}

export function writeSummary(dir: string, n: number, mutate?: (doc: any) => void): string {
  const doc = makeSummary(n);
  if (mutate) mutate(doc);
  const file = path.join(dir, `summary-n${n}.json`);
  fs.writeFileSync(file, JSON.stringify(doc));
  return file;
}

export function writeRunCsv(dir: string, rows = 16): string {
  const lines = ["run_id,t,stage,action_node,action_value,reward,mu,cum_regret"];
  let cum = 0;
  for (let t = 1; t <= rows; t++) {
    cum += 0.25 * (t % 3); // increments stay non-negative
    lines.push(`demo-s0,${t},stage3,0,1,0.5,0.75,${cum}`);
  }
  const file = path.join(dir, "demo-s0000.csv");
  fs.writeFileSync(file, lines.join("\n") + "\n");
  return file;
}
