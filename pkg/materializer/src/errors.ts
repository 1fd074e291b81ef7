/** Error hierarchy for the materializer. */

export class MaterializerError extends Error {
  constructor(message: string) {
    super(message);
    this.name = new.target.name;
  }
}

/** The document is not valid JSON or not valid UTF-8. */
export class ParseError extends MaterializerError {}

/** The document is JSON but does not match the class file schema. */
export class SchemaError extends MaterializerError {}

/** A class with this name already lives in the session registry. */
export class NameCollision extends MaterializerError {
  readonly className: string;

  constructor(className: string) {
    super(`a class named '${className}' is already materialized`);
    this.className = className;
  }
}

/**
 * Thrown by every materialized method stub. Class files carry signatures
 * and body references, not code, so calling a method can only report where
 * the implementation would live.
 */
export class NotImplementedStub extends MaterializerError {
  readonly className: string;
  readonly methodName: string;
  readonly bodyRef: string | null;

  constructor(className: string, methodName: string, bodyRef: string | null) {
    const where = bodyRef === null ? "no body reference" : `body ref '${bodyRef}'`;
    super(`${className}.${methodName} is a stub (${where})`);
    this.className = className;
    this.methodName = methodName;
    this.bodyRef = bodyRef;
  }
}
