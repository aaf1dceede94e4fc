#!/usr/bin/env node
/**
 * plots <kind> --in <summary.json> [--in ...] --out <file.svg> [--log-x]
 *
 * Batch figure generation from harness outputs.  Exit codes: 0 on
 * success, 1 when an input fails schema validation, 2 on usage errors.
 */

import * as fs from "node:fs";
import { parseArgs } from "node:util";

import { buildFigure } from "./figures";
import { FigureKind, SchemaMismatch } from "./types";

const KINDS: FigureKind[] = ["regret_curve", "scaling", "budgets"];

const USAGE = `usage: plots <kind> --in <summary.json> [--in ...] --out <file.svg> [--log-x]

kinds:
  regret_curve  cumulative-regret curves with min/max bands across seeds;
                takes one summary.json, or one single-run CSV
  scaling       mean final regret against instance size; takes one
                summary.json per size
  budgets       per-run identification rounds against their closed-form
                caps; takes one summary.json
`;

class UsageError extends Error {}

function parseSpec(argv: string[]) {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        in: { type: "string", multiple: true },
        out: { type: "string" },
        "log-x": { type: "boolean", default: false },
      },
      allowPositionals: true,
    });
  } catch (err) {
    throw new UsageError((err as Error).message);
  }
  const { values, positionals } = parsed;
  if (positionals.length !== 1 || !KINDS.includes(positionals[0] as FigureKind)) {
    throw new UsageError(`expected one figure kind out of ${KINDS.join(", ")}`);
  }
  const kind = positionals[0] as FigureKind;
  const inputs = values.in ?? [];
  if (inputs.length === 0) {
    throw new UsageError("at least one --in is required");
  }
  if (kind !== "scaling" && inputs.length !== 1) {
    throw new UsageError(`${kind} takes exactly one --in`);
  }
  if (!values.out) {
    throw new UsageError("--out is required");
  }
  for (const input of inputs) {
    if (!fs.existsSync(input)) {
      throw new UsageError(`no such input: ${input}`);
    }
  }
  return { kind, inputs, out: values.out, logX: values["log-x"] ?? false };
}

export function runCli(argv: string[]): number {
  let spec;
  try {
    spec = parseSpec(argv);
  } catch (err) {
    console.error(`plots: ${(err as Error).message}`);
    console.error(USAGE);
    return 2;
  }
  try {
    fs.writeFileSync(spec.out, buildFigure(spec), "utf-8");
  } catch (err) {
    if (err instanceof SchemaMismatch) {
      console.error(`plots: ${err.message}`);
      return 1;
    }
    throw err;
  }
  return 0;
}

// vitest imports this module under an ESM transform, where require is absent
if (typeof require !== "undefined" && require.main === module) {
  process.exitCode = runCli(process.argv.slice(2));
}
