/**
 * Command line entry point.
 *
 * Usage: materialize DESCRIPTOR [--export-dir DIR]
 *
 * Materializes every flattened type of the descriptor, prints a summary
 * per class, and with --export-dir writes one NAME.cls class file per
 * class into DIR (created if missing). Exit code 0 on success, 1 on
 * usage, parse, schema, collision or I/O errors.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { pathToFileURL } from "node:url";

import { exportBack } from "./exportBack.js";
import { materialize, SessionRegistry } from "./materialize.js";

const USAGE = "usage: materialize DESCRIPTOR [--export-dir DIR]";

type Print = (line: string) => void;

function n(count: number, word: string, plural = word + "s"): string {
  return `${count} ${count === 1 ? word : plural}`;
}

interface Args {
  descriptor: string;
  exportDir: string | null;
}

function parseArgs(argv: string[]): Args {
  const positional: string[] = [];
  let exportDir: string | null = null;
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i]!;
    if (arg === "--export-dir") {
      const value = argv[i + 1];
      if (value === undefined) {
        throw new Error("--export-dir requires a directory");
      }
      exportDir = value;
      i += 1;
    } else if (arg.startsWith("--")) {
      throw new Error(`unknown option '${arg}'`);
    } else {
      positional.push(arg);
    }
  }
  if (positional[0] !== "materialize") {
    throw new Error(USAGE);
  }
  if (positional.length !== 2) {
    throw new Error(USAGE);
  }
  return { descriptor: positional[1]!, exportDir };
}

export function runCli(argv: string[], out: Print, err: Print): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (e) {
    err((e as Error).message);
    return 1;
  }
  try {
    const registry = new SessionRegistry();
    const handles = materialize(args.descriptor, registry);
    out(
      `materialized ${n(handles.length, "class", "classes")} from ${args.descriptor}`,
    );
    for (const handle of handles) {
      out(
        `  ${handle.name}: ${n(handle.attributes.size, "attribute")},` +
          ` ${n(handle.stubs.size, "stub")}`,
      );
    }
    if (args.exportDir !== null) {
      mkdirSync(args.exportDir, { recursive: true });
      for (const handle of handles) {
        const target = join(args.exportDir, `${handle.name}.cls`);
        writeFileSync(target, exportBack(handle), "utf8");
        out(`wrote ${target}`);
      }
    }
    return 0;
  } catch (e) {
    err(`error: ${(e as Error).message}`);
    return 1;
  }
}

export function main(): void {
  process.exitCode = runCli(
    process.argv.slice(2),
    (line) => process.stdout.write(line + "\n"),
    (line) => process.stderr.write(line + "\n"),
  );
}

// Run only when invoked as a program, not when imported by tests.
if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  main();
}
