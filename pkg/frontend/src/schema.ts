/**
 * Experiment CSV schema.
 *
 * The producing CLI writes one row per grid point with the fixed columns
 *   experiment, h, w, eps_num, eps_den, c, n, trials, observed, bound, pass
 * This module is the only coupling to the producer: everything downstream
 * works from the parsed rows.
 */

export const REQUIRED_COLUMNS = [
  "experiment",
  "h",
  "w",
  "eps_num",
  "eps_den",
  "c",
  "n",
  "trials",
  "observed",
  "bound",
  "pass",
] as const;

export type ColumnName = (typeof REQUIRED_COLUMNS)[number];

export interface Row {
  experiment: string;
  h: number;
  w: number;
  epsNum: number;
  epsDen: number;
  /** Epsilon as a float; the CSV keeps it exact as eps_num/eps_den. */
  eps: number;
  c: number;
  n: number;
  trials: number;
  observed: number;
  bound: number;
  pass: boolean;
}

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

function splitLine(line: string): string[] {
  return line.split(",").map((cell) => cell.trim());
}

function toNumber(value: string, column: string, lineno: number): number {
  const parsed = Number(value);
  if (value === "" || Number.isNaN(parsed)) {
    throw new SchemaError(
      `line ${lineno}: column ${column} is not a number: ${JSON.stringify(value)}`,
    );
  }
  return parsed;
}

function toInt(value: string, column: string, lineno: number): number {
  const parsed = toNumber(value, column, lineno);
  if (!Number.isInteger(parsed)) {
    throw new SchemaError(
      `line ${lineno}: column ${column} is not an integer: ${JSON.stringify(value)}`,
    );
  }
  return parsed;
}

function toBool(value: string, column: string, lineno: number): boolean {
  if (value === "True" || value === "true" || value === "1") return true;
  if (value === "False" || value === "false" || value === "0") return false;
  throw new SchemaError(
    `line ${lineno}: column ${column} is not a boolean: ${JSON.stringify(value)}`,
  );
}

/** Parse experiment CSV text into validated rows. */
export function parseCsv(text: string): Row[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length === 0) {
    throw new SchemaError("empty CSV: no header row");
  }
  const header = splitLine(lines[0]);
  const index = new Map<string, number>();
  header.forEach((name, i) => index.set(name, i));
  for (const column of REQUIRED_COLUMNS) {
    if (!index.has(column)) {
      throw new SchemaError(`missing column: ${column}`);
    }
  }
  if (lines.length === 1) {
    throw new SchemaError("empty CSV: header but no data rows");
  }

  const rows: Row[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = splitLine(lines[i]);
    const lineno = i + 1;
    if (cells.length !== header.length) {
      throw new SchemaError(
        `line ${lineno}: expected ${header.length} cells, got ${cells.length}`,
      );
    }
    const cell = (column: ColumnName): string => cells[index.get(column)!];
    const epsNum = toInt(cell("eps_num"), "eps_num", lineno);
    const epsDen = toInt(cell("eps_den"), "eps_den", lineno);
    if (epsDen <= 0) {
      throw new SchemaError(`line ${lineno}: eps_den must be positive`);
    }
    rows.push({
      experiment: cell("experiment"),
      h: toInt(cell("h"), "h", lineno),
      w: toInt(cell("w"), "w", lineno),
      epsNum,
      epsDen,
      eps: epsNum / epsDen,
      c: toNumber(cell("c"), "c", lineno),
      n: toInt(cell("n"), "n", lineno),
      trials: toInt(cell("trials"), "trials", lineno),
      observed: toNumber(cell("observed"), "observed", lineno),
      bound: toNumber(cell("bound"), "bound", lineno),
      pass: toBool(cell("pass"), "pass", lineno),
    });
  }
  return rows;
}

/** Distinct values of a numeric field, ascending. */
export function distinct(rows: Row[], pick: (row: Row) => number): number[] {
  return [...new Set(rows.map(pick))].sort((a, b) => a - b);
}

/** Group rows by a string key, preserving first-seen key order. */
export function groupBy(rows: Row[], key: (row: Row) => string): Map<string, Row[]> {
  const groups = new Map<string, Row[]>();
  for (const row of rows) {
    const k = key(row);
    const bucket = groups.get(k);
    if (bucket) bucket.push(row);
    else groups.set(k, [row]);
  }
  return groups;
}
