/**
 * Live class creation from descriptors.
 *
 * Each flattened type in a descriptor's payload becomes a real runtime
 * class: valued properties turn into prototype defaults readable on
 * fresh instances, value-less properties exist but read undefined, and
 * methods become stubs that throw, carrying the body reference. The
 * engine moves structure between programs, not behavior, so a stub is
 * all a method can honestly be.
 */

import { readFileSync } from "node:fs";

import { canonicalizePayload } from "./canonical.js";
import { NameCollision, NotImplementedStub } from "./errors.js";
import { flattenTypes } from "./flatten.js";
import { parseDescriptor } from "./parse.js";
import { Descriptor, FlatType, Scalar } from "./types.js";

/** Marker for a property that has no default value. */
export const UNSET: unique symbol = Symbol("unset");

export type AttributeDefault = Scalar | typeof UNSET;

export type Stub = (...args: unknown[]) => never;

export type LiveClass = new () => Record<string, unknown>;

/** One materialized class and the structure it was built from. */
export interface RuntimeClassHandle {
  name: string;
  /** Path of the descriptor this class came from. */
  origin: string;
  /** The flattened type, canonical payload order. */
  flat: FlatType;
  cls: LiveClass;
  /** Property name to default literal, or UNSET for value-less ones. */
  attributes: Map<string, AttributeDefault>;
  /** Method name to the throwing stub installed on the prototype. */
  stubs: Map<string, Stub>;
}

/**
 * The classes materialized so far in this session, by name. Confined to
 * one process; names are claimed first-come.
 */
export class SessionRegistry {
  private readonly handles = new Map<string, RuntimeClassHandle>();

  has(name: string): boolean {
    return this.handles.has(name);
  }

  get(name: string): RuntimeClassHandle | undefined {
    return this.handles.get(name);
  }

  names(): string[] {
    return [...this.handles.keys()].sort();
  }

  register(handle: RuntimeClassHandle): void {
    if (this.handles.has(handle.name)) {
      throw new NameCollision(handle.name);
    }
    this.handles.set(handle.name, handle);
  }
}

function makeStub(className: string, methodName: string, bodyRef: string | null): Stub {
  return () => {
    throw new NotImplementedStub(className, methodName, bodyRef);
  };
}

function buildHandle(flat: FlatType, origin: string): RuntimeClassHandle {
  // A computed-key class expression gives the constructor a real name.
  const cls = { [flat.name]: class {} }[flat.name] as LiveClass;

  const attributes = new Map<string, AttributeDefault>();
  for (const p of flat.specification) {
    attributes.set(p.name, p.value === null ? UNSET : p.value);
    Object.defineProperty(cls.prototype, p.name, {
      value: p.value === null ? undefined : p.value,
      writable: true,
      enumerable: true,
      configurable: true,
    });
  }

  const stubs = new Map<string, Stub>();
  for (const m of flat.signature) {
    const stub = makeStub(flat.name, m.name, m.bodyRef);
    stubs.set(m.name, stub);
    Object.defineProperty(cls.prototype, m.name, {
      value: stub,
      writable: true,
      enumerable: false,
      configurable: true,
    });
  }

  return { name: flat.name, origin, flat, cls, attributes, stubs };
}

/**
 * Create one live class per flattened type of the descriptor at `path`.
 *
 * The descriptor file is only read. Registration is all-or-nothing: a
 * name collision with `registry` (or within the payload itself) throws
 * NameCollision before any class is registered.
 */
export function materialize(
  path: string,
  registry: SessionRegistry,
): RuntimeClassHandle[] {
  const descriptor = parseDescriptor(readFileSync(path, "utf8"), path);
  return materializePayload(descriptor, path, registry);
}

/** Same as materialize, for an already-parsed descriptor. */
export function materializePayload(
  descriptor: Descriptor,
  origin: string,
  registry: SessionRegistry,
): RuntimeClassHandle[] {
  const flats = flattenTypes(canonicalizePayload(descriptor.payload));
  const seen = new Set<string>();
  for (const flat of flats) {
    if (registry.has(flat.name) || seen.has(flat.name)) {
      throw new NameCollision(flat.name);
    }
    seen.add(flat.name);
  }
  const handles = flats.map((flat) => buildHandle(flat, origin));
  for (const handle of handles) {
    registry.register(handle);
  }
  return handles;
}
