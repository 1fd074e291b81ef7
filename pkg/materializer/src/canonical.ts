/**
 * Canonical ordering and byte-exact serialization.
 *
 * Exported class files must be byte-identical to the ones the producing
 * CLI writes, so exporting a class that was never edited proves the
 * round trip lossless. That rules out JSON.stringify: the producer
 * renders real literals with a decimal point ("4.0"), keeps a fixed key
 * order, indents with two spaces and ends with a newline. The emitter
 * here reproduces that layout from a small document tree in which
 * numbers are carried as preformatted text.
 */

import {
  ClassPayload,
  FlatType,
  FORMAT_VERSION,
  MethodSpec,
  PropertySpec,
  ProjectionSpec,
  Scalar,
} from "./types.js";

// --------------------------------------------------------------------------
// Ordering
// --------------------------------------------------------------------------

/** Compare by Unicode code point, not UTF-16 code unit. */
export function compareText(a: string, b: string): number {
  const ia = a[Symbol.iterator]();
  const ib = b[Symbol.iterator]();
  for (;;) {
    const na = ia.next();
    const nb = ib.next();
    if (na.done && nb.done) {
      return 0;
    }
    if (na.done) {
      return -1;
    }
    if (nb.done) {
      return 1;
    }
    const ca = na.value.codePointAt(0)!;
    const cb = nb.value.codePointAt(0)!;
    if (ca !== cb) {
      return ca < cb ? -1 : 1;
    }
  }
}

function compareTextArrays(a: string[], b: string[]): number {
  const n = Math.min(a.length, b.length);
  for (let i = 0; i < n; i += 1) {
    const c = compareText(a[i]!, b[i]!);
    if (c !== 0) {
      return c;
    }
  }
  return a.length - b.length;
}

function compareMethods(a: MethodSpec, b: MethodSpec): number {
  return (
    compareText(a.name, b.name) ||
    compareTextArrays(
      a.params.map((p) => p.datatype),
      b.params.map((p) => p.datatype),
    ) ||
    compareText(a.returns ?? "", b.returns ?? "") ||
    compareTextArrays(
      a.params.map((p) => p.name),
      b.params.map((p) => p.name),
    ) ||
    compareText(a.bodyRef ?? "", b.bodyRef ?? "")
  );
}

function sortedProps(spec: PropertySpec[]): PropertySpec[] {
  return [...spec].sort((a, b) => compareText(a.name, b.name));
}

function sortedMethods(sig: MethodSpec[]): MethodSpec[] {
  return [...sig].sort(compareMethods);
}

/**
 * Deterministic ordering: properties by name, methods by signature,
 * projections by type name. Matches the producer, so serializing a
 * canonical payload reproduces its file bytes.
 */
export function canonicalizePayload(payload: ClassPayload): ClassPayload {
  if (payload.kind === "homogeneous") {
    return {
      ...payload,
      specification: sortedProps(payload.specification),
      signature: sortedMethods(payload.signature),
    };
  }
  const projections = [...payload.projections]
    .sort((a, b) => compareText(a.typeName, b.typeName))
    .map((p: ProjectionSpec) => ({
      typeName: p.typeName,
      specification: sortedProps(p.specification),
      signature: sortedMethods(p.signature),
    }));
  return {
    ...payload,
    core: {
      specification: sortedProps(payload.core.specification),
      signature: sortedMethods(payload.core.signature),
    },
    projections,
  };
}

// --------------------------------------------------------------------------
// Number formatting (producer-compatible)
// --------------------------------------------------------------------------

/** Integer literal text: no decimal point, no exponent. */
export function formatInteger(v: number): string {
  if (Number.isSafeInteger(v)) {
    return String(v);
  }
  return BigInt(v).toString();
}

/**
 * Real literal text as the producer's shortest round-trip repr writes
 * it: integral values keep a trailing ".0", scientific notation starts
 * at 1e16 and below 1e-4, and exponents carry a sign and two digits.
 */
export function formatReal(v: number): string {
  if (Object.is(v, -0)) {
    return "-0.0";
  }
  if (v === 0) {
    return "0.0";
  }
  const sci = v.toExponential();
  const exp = Number(sci.slice(sci.indexOf("e") + 1));
  if (exp >= 16 || exp <= -5) {
    const mantissa = sci.slice(0, sci.indexOf("e"));
    const sign = exp < 0 ? "-" : "+";
    const digits = String(Math.abs(exp)).padStart(2, "0");
    return `${mantissa}e${sign}${digits}`;
  }
  if (Number.isInteger(v)) {
    return v.toFixed(1);
  }
  return String(v);
}

// --------------------------------------------------------------------------
// Emission
// --------------------------------------------------------------------------

/** A leaf whose text is already in final form (numbers). */
class Raw {
  constructor(readonly text: string) {}
}

type Node = null | boolean | string | Raw | Node[] | { [key: string]: Node };

function emit(node: Node, depth: number): string {
  if (node === null) {
    return "null";
  }
  if (typeof node === "boolean") {
    return node ? "true" : "false";
  }
  if (typeof node === "string") {
    return JSON.stringify(node);
  }
  if (node instanceof Raw) {
    return node.text;
  }
  const pad = "  ".repeat(depth);
  const inner = "  ".repeat(depth + 1);
  if (Array.isArray(node)) {
    if (node.length === 0) {
      return "[]";
    }
    const items = node.map((item) => inner + emit(item, depth + 1));
    return `[\n${items.join(",\n")}\n${pad}]`;
  }
  const entries = Object.entries(node);
  if (entries.length === 0) {
    return "{}";
  }
  const items = entries.map(
    ([key, value]) => `${inner}${JSON.stringify(key)}: ${emit(value, depth + 1)}`,
  );
  return `{\n${items.join(",\n")}\n${pad}}`;
}

function literalNode(datatype: string, value: Scalar | null): Node {
  if (value === null || typeof value !== "number") {
    return value;
  }
  return new Raw(datatype === "real" ? formatReal(value) : formatInteger(value));
}

function propertyNode(p: PropertySpec): Node {
  return {
    name: p.name,
    datatype: p.datatype,
    value: literalNode(p.datatype, p.value),
  };
}

function methodNode(m: MethodSpec): Node {
  return {
    name: m.name,
    params: m.params.map((q) => ({ name: q.name, datatype: q.datatype })),
    returns: m.returns,
    body_ref: m.bodyRef,
  };
}

/** Class-file text for one flattened type, canonical and final. */
export function serializeFlatType(flat: FlatType): string {
  const doc: Node = {
    format: FORMAT_VERSION,
    kind: "homogeneous",
    name: flat.name,
    specification: sortedProps(flat.specification).map(propertyNode),
    signature: sortedMethods(flat.signature).map(methodNode),
  };
  return emit(doc, 0) + "\n";
}
