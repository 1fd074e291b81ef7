/** Turning a payload into the homogeneous types it defines. */

import { ClassPayload, FlatType } from "./types.js";

/**
 * Enumerate the flattened types of a payload, in payload order.
 *
 * A homogeneous payload is one type. A heterogeneous payload yields one
 * type per projection, named after the projection, with the core
 * members prepended to the projection members.
 */
export function flattenTypes(payload: ClassPayload): FlatType[] {
  if (payload.kind === "homogeneous") {
    return [
      {
        name: payload.name,
        specification: payload.specification,
        signature: payload.signature,
      },
    ];
  }
  return payload.projections.map((p) => ({
    name: p.typeName,
    specification: [...payload.core.specification, ...p.specification],
    signature: [...payload.core.signature, ...p.signature],
  }));
}
