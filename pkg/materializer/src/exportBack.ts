/** Round trip: a materialized class back to class-file text. */

import { serializeFlatType } from "./canonical.js";
import { RuntimeClassHandle } from "./materialize.js";

/**
 * Class-file text for a handle's type. Byte-identical to the canonical
 * class file of the flattened type the handle was materialized from,
 * which is what makes the round trip checkable.
 */
export function exportBack(handle: RuntimeClassHandle): string {
  return serializeFlatType(handle.flat);
}
