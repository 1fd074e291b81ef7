/**
 * Shapes shared across the materializer.
 *
 * These mirror the on-disk class file and descriptor documents produced by
 * the `oodn` package. A descriptor is a class file plus lineage and a
 * timestamp; both carry the same `format` tag.
 */

export const FORMAT_VERSION = "oodn-class/1";

export type DataType = "integer" | "real" | "text" | "boolean";

export const DATA_TYPES: readonly DataType[] = [
  "integer",
  "real",
  "text",
  "boolean",
];

/** A literal a valued property can hold. */
export type Scalar = number | string | boolean;

export interface PropertySpec {
  name: string;
  datatype: DataType;
  /** The default literal, or null for a value-less property. */
  value: Scalar | null;
}

export interface ParamSpec {
  name: string;
  datatype: DataType;
}

export interface MethodSpec {
  name: string;
  params: ParamSpec[];
  returns: DataType | null;
  bodyRef: string | null;
}

/** One type's members: what a flattened class is made of. */
export interface Members {
  specification: PropertySpec[];
  signature: MethodSpec[];
}

export interface HomogeneousPayload extends Members {
  kind: "homogeneous";
  name: string;
}

export interface ProjectionSpec extends Members {
  typeName: string;
}

export interface HeterogeneousPayload {
  kind: "heterogeneous";
  name: string;
  core: Members;
  projections: ProjectionSpec[];
}

export type ClassPayload = HomogeneousPayload | HeterogeneousPayload;

export interface LineageInfo {
  op: string;
  inputs: string[];
}

export interface Descriptor {
  payload: ClassPayload;
  lineage: LineageInfo;
  emittedAt: string;
}

/**
 * A single concrete type pulled out of a payload: the unit the runtime
 * actually turns into a class. Heterogeneous payloads yield one per
 * projection (core members prepended); homogeneous payloads yield one.
 */
export interface FlatType {
  name: string;
  specification: PropertySpec[];
  signature: MethodSpec[];
}
