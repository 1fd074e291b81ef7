export {
  FORMAT_VERSION,
  DATA_TYPES,
  type DataType,
  type Scalar,
  type PropertySpec,
  type ParamSpec,
  type MethodSpec,
  type Members,
  type HomogeneousPayload,
  type HeterogeneousPayload,
  type ProjectionSpec,
  type ClassPayload,
  type LineageInfo,
  type Descriptor,
  type FlatType,
} from "./types.js";
export {
  MaterializerError,
  ParseError,
  SchemaError,
  NameCollision,
  NotImplementedStub,
} from "./errors.js";
export { parseClassDocument, parseDescriptor } from "./parse.js";
export { flattenTypes } from "./flatten.js";
export {
  canonicalizePayload,
  compareText,
  formatInteger,
  formatReal,
  serializeFlatType,
} from "./canonical.js";
export {
  UNSET,
  type AttributeDefault,
  type Stub,
  type LiveClass,
  type RuntimeClassHandle,
  SessionRegistry,
  materialize,
  materializePayload,
} from "./materialize.js";
export { exportBack } from "./exportBack.js";
export { runCli } from "./cli.js";
