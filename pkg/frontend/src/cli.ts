#!/usr/bin/env node
/**
 * Batch plot tool: reads an experiment CSV and writes a static SVG chart.
 *
 *   node dist/cli.js --csv results.csv --kind detection-curve --out plot.svg
 *
 * Exit codes: 0 on success, 2 on bad arguments, unreadable input, or a CSV
 * that does not match the documented schema.
 */

import * as fs from "fs";
import { CHART_KINDS, ChartKind, PlotJob, render } from "./charts";
import { SchemaError, parseCsv } from "./schema";

interface CliArgs {
  csv: string;
  kind: ChartKind;
  out: string;
  title?: string;
}

export function parseArgs(argv: string[]): CliArgs {
  const values = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    if (!flag.startsWith("--") || i + 1 >= argv.length) {
      throw new Error(`usage: --csv <file> --kind <${CHART_KINDS.join("|")}> --out <file> [--title <text>]`);
    }
    values.set(flag.slice(2), argv[i + 1]);
  }
  for (const required of ["csv", "kind", "out"]) {
    if (!values.has(required)) {
      throw new Error(`missing required flag --${required}`);
    }
  }
  const kind = values.get("kind")!;
  if (!(CHART_KINDS as readonly string[]).includes(kind)) {
    throw new Error(`unknown chart kind ${JSON.stringify(kind)}; choose from ${CHART_KINDS.join(", ")}`);
  }
  return {
    csv: values.get("csv")!,
    kind: kind as ChartKind,
    out: values.get("out")!,
    title: values.get("title"),
  };
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 2;
  }
  try {
    const text = fs.readFileSync(args.csv, "utf-8");
    const job: PlotJob = { rows: parseCsv(text), kind: args.kind, title: args.title };
    const svg = render(job);
    fs.writeFileSync(args.out, svg);
    process.stdout.write(`${args.kind} -> ${args.out}\n`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || (err as NodeJS.ErrnoException).code !== undefined) {
      process.stderr.write(`error: ${(err as Error).message}\n`);
      return 2;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
