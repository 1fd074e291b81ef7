/**
 * Parsing for class files and descriptors.
 *
 * The rules mirror the producing side: the `format` tag and `kind` are
 * gates, member arrays are required, unknown keys inside known structures
 * are schema errors (reported with a document path), and extra top-level
 * keys are tolerated so a class file reader accepts descriptors too.
 */

import {
  ClassPayload,
  DataType,
  DATA_TYPES,
  Descriptor,
  FORMAT_VERSION,
  Members,
  MethodSpec,
  ParamSpec,
  ProjectionSpec,
  PropertySpec,
} from "./types.js";
import { ParseError, SchemaError } from "./errors.js";

type Json = null | boolean | number | string | Json[] | { [key: string]: Json };

function isObject(v: Json): v is { [key: string]: Json } {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function expectObj(v: Json, path: string): { [key: string]: Json } {
  if (!isObject(v)) {
    throw new SchemaError(`${path}: expected an object`);
  }
  return v;
}

function expectList(v: Json | undefined, path: string): Json[] {
  if (!Array.isArray(v)) {
    throw new SchemaError(`${path}: expected an array`);
  }
  return v;
}

function expectStr(v: Json | undefined, path: string): string {
  if (typeof v !== "string") {
    throw new SchemaError(`${path}: expected a string`);
  }
  return v;
}

function requireKey(obj: { [key: string]: Json }, key: string, path: string): Json {
  if (!(key in obj)) {
    throw new SchemaError(`${path}: missing required key '${key}'`);
  }
  return obj[key]!;
}

function rejectUnknown(
  obj: { [key: string]: Json },
  known: readonly string[],
  path: string,
): void {
  for (const key of Object.keys(obj)) {
    if (!known.includes(key)) {
      throw new SchemaError(`${path}: unknown key '${key}'`);
    }
  }
}

function parseDatatype(v: Json | undefined, path: string): DataType {
  const tag = expectStr(v, path);
  if (!(DATA_TYPES as readonly string[]).includes(tag)) {
    throw new SchemaError(
      `${path}: unknown datatype '${tag}' (expected one of ${DATA_TYPES.join(", ")})`,
    );
  }
  return tag as DataType;
}

function parseProperty(v: Json, path: string): PropertySpec {
  const obj = expectObj(v, path);
  rejectUnknown(obj, ["name", "datatype", "value"], path);
  const name = expectStr(requireKey(obj, "name", path), `${path}.name`);
  const datatype = parseDatatype(requireKey(obj, "datatype", path), `${path}.datatype`);
  const raw = obj["value"];
  if (raw === undefined || raw === null) {
    return { name, datatype, value: null };
  }
  if (
    typeof raw !== "string" &&
    typeof raw !== "number" &&
    typeof raw !== "boolean"
  ) {
    throw new SchemaError(`${path}.value: expected a scalar`);
  }
  return { name, datatype, value: raw };
}

function parseParam(v: Json, path: string): ParamSpec {
  const obj = expectObj(v, path);
  rejectUnknown(obj, ["name", "datatype"], path);
  return {
    name: expectStr(requireKey(obj, "name", path), `${path}.name`),
    datatype: parseDatatype(requireKey(obj, "datatype", path), `${path}.datatype`),
  };
}

function parseMethod(v: Json, path: string): MethodSpec {
  const obj = expectObj(v, path);
  rejectUnknown(obj, ["name", "params", "returns", "body_ref"], path);
  const name = expectStr(requireKey(obj, "name", path), `${path}.name`);
  const rawParams = obj["params"];
  const params =
    rawParams === undefined
      ? []
      : expectList(rawParams, `${path}.params`).map((p, i) =>
          parseParam(p, `${path}.params[${i}]`),
        );
  const rawReturns = obj["returns"];
  const returns =
    rawReturns === undefined || rawReturns === null
      ? null
      : parseDatatype(rawReturns, `${path}.returns`);
  const rawBody = obj["body_ref"];
  const bodyRef =
    rawBody === undefined || rawBody === null
      ? null
      : expectStr(rawBody, `${path}.body_ref`);
  return { name, params, returns, bodyRef };
}

function parseMembers(obj: { [key: string]: Json }, path: string): Members {
  const specification = expectList(
    requireKey(obj, "specification", path),
    `${path}.specification`,
  ).map((p, i) => parseProperty(p, `${path}.specification[${i}]`));
  const signature = expectList(
    requireKey(obj, "signature", path),
    `${path}.signature`,
  ).map((m, i) => parseMethod(m, `${path}.signature[${i}]`));
  return { specification, signature };
}

function parseProjection(v: Json, path: string): ProjectionSpec {
  const obj = expectObj(v, path);
  rejectUnknown(obj, ["type_name", "specification", "signature"], path);
  const typeName = expectStr(requireKey(obj, "type_name", path), `${path}.type_name`);
  const { specification, signature } = parseMembers(obj, path);
  return { typeName, specification, signature };
}

/**
 * Parse a class file or descriptor document into a payload. `source` labels
 * error messages, typically with the file path.
 */
export function parseClassDocument(text: string, source: string): ClassPayload {
  let root: Json;
  try {
    root = JSON.parse(text, (_key, v) => {
      if (typeof v === "number" && !Number.isFinite(v)) {
        throw new ParseError(`${source}: non-finite numbers are not allowed`);
      }
      return v as Json;
    }) as Json;
  } catch (err) {
    if (err instanceof ParseError) {
      throw err;
    }
    throw new ParseError(`${source}: ${(err as Error).message}`);
  }
  const obj = expectObj(root, source);
  const format = expectStr(requireKey(obj, "format", source), `${source}.format`);
  if (format !== FORMAT_VERSION) {
    throw new SchemaError(
      `${source}.format: unsupported format '${format}' (expected '${FORMAT_VERSION}')`,
    );
  }
  const kind = expectStr(requireKey(obj, "kind", source), `${source}.kind`);
  const name = expectStr(requireKey(obj, "name", source), `${source}.name`);
  if (kind === "homogeneous") {
    const { specification, signature } = parseMembers(obj, source);
    return { kind, name, specification, signature };
  }
  if (kind === "heterogeneous") {
    const core = parseMembers(
      expectObj(requireKey(obj, "core", source), `${source}.core`),
      `${source}.core`,
    );
    const projections = expectList(
      requireKey(obj, "projections", source),
      `${source}.projections`,
    ).map((p, i) => parseProjection(p, `${source}.projections[${i}]`));
    return { kind, name, core, projections };
  }
  throw new SchemaError(
    `${source}.kind: unknown kind '${kind}' (expected homogeneous or heterogeneous)`,
  );
}

/** Parse a descriptor: a class document plus lineage and a timestamp. */
export function parseDescriptor(text: string, source: string): Descriptor {
  const payload = parseClassDocument(text, source);
  const obj = expectObj(JSON.parse(text) as Json, source);
  const lineageObj = expectObj(requireKey(obj, "lineage", source), `${source}.lineage`);
  rejectUnknown(lineageObj, ["op", "inputs"], `${source}.lineage`);
  const op = expectStr(requireKey(lineageObj, "op", source), `${source}.lineage.op`);
  const inputs = expectList(
    requireKey(lineageObj, "inputs", source),
    `${source}.lineage.inputs`,
  ).map((v, i) => expectStr(v, `${source}.lineage.inputs[${i}]`));
  const emittedAt = expectStr(
    requireKey(obj, "emitted_at", source),
    `${source}.emitted_at`,
  );
  return { payload, lineage: { op, inputs }, emittedAt };
}
