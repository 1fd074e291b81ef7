"""Command-line interface over the exploiters and class files.

Every subcommand is a thin wrapper: it loads class files, calls one
library operation, and saves the result, so the file output re-loaded
is exactly what the library call returns.  Exit codes: 0 success, 2 the
requested class does not exist, 3 validation failure, 1 usage, parse or
I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .errors import (
    DoesNotExist,
    DuplicateTypes,
    InvalidName,
    ParseError,
    RegistryError,
    SchemaError,
    TooFewInputs,
    ValidationError,
)
from .exploiters import (
    ExploiterOutcome,
    Lineage,
    Strategy,
    clone_class,
    difference,
    intersection,
    symmetric_difference,
    union,
)
from .model import (
    AnyClass,
    HomogeneousClass,
    types_of,
    validate,
    warnings_for,
)
from .storage import emit_descriptor, load, read_class_file, save

__all__ = ["run_cli", "main"]


class _UsageError(Exception):
    """Raised instead of argparse's SystemExit so usage maps to exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.prog}: {message}")


def _n(count: int, word: str) -> str:
    if count == 1:
        return f"1 {word}"
    plural = word[:-1] + "ies" if word.endswith("y") else word + "s"
    return f"{count} {plural}"


def _describe(c: AnyClass) -> str:
    if isinstance(c, HomogeneousClass):
        return (
            f"homogeneous, {_n(len(c.spec), 'property')},"
            f" {_n(len(c.sig), 'method')}"
        )
    return (
        f"heterogeneous, core {_n(len(c.core_spec), 'property')}"
        f" + {_n(len(c.core_sig), 'method')},"
        f" {_n(len(c.projections), 'projection')}"
    )


def _report(ns: argparse.Namespace, outcome: ExploiterOutcome) -> None:
    print(f"{outcome.result.name}: {_describe(outcome.result)}")
    for note in outcome.lineage.notes:
        print(f"note: {note}")
    if ns.stats:
        s = outcome.stats
        print(
            f"stats: property_comparisons={s.property_comparisons}"
            f" method_comparisons={s.method_comparisons}"
            f" tuples_considered={s.tuples_considered}"
        )
    print(f"wrote {ns.output}")


def _cmd_validate(ns: argparse.Namespace) -> int:
    saw_invalid = False
    saw_error = False
    for file in ns.files:
        try:
            c = read_class_file(file)
        except (ParseError, SchemaError, OSError) as e:
            print(f"{file}: ERROR {e}", file=sys.stderr)
            saw_error = True
            continue
        violations = validate(c)
        if violations:
            print(f"{file}: INVALID {c.name}")
            for v in violations:
                print(f"  - {v}")
            saw_invalid = True
            continue
        print(f"{file}: OK {c.name} ({_describe(c)})")
        for w in warnings_for(c):
            print(f"note: {w}")
    if saw_error:
        return 1
    if saw_invalid:
        return 3
    return 0


def _cmd_union(ns: argparse.Namespace) -> int:
    inputs = [load(p) for p in ns.files]
    outcome = union(inputs, strategy=Strategy(ns.strategy), result_name=ns.name)
    save(outcome.result, ns.output)
    _report(ns, outcome)
    return 0


def _cmd_intersect(ns: argparse.Namespace) -> int:
    inputs = [load(p) for p in ns.files]
    outcome = intersection(
        inputs, strategy=Strategy(ns.strategy), result_name=ns.name
    )
    save(outcome.result, ns.output)
    _report(ns, outcome)
    return 0


def _cmd_diff(ns: argparse.Namespace) -> int:
    minuend = load(ns.minuend)
    subtrahends = [load(p) for p in ns.files]
    outcome = difference(
        minuend, subtrahends, strategy=Strategy(ns.strategy), result_name=ns.name
    )
    save(outcome.result, ns.output)
    _report(ns, outcome)
    return 0


def _cmd_symdiff(ns: argparse.Namespace) -> int:
    a = load(ns.a)
    b = load(ns.b)
    outcome = symmetric_difference(
        a, b, strategy=Strategy(ns.strategy), result_name=ns.name
    )
    save(outcome.result, ns.output)
    _report(ns, outcome)
    return 0


def _cmd_clone(ns: argparse.Namespace) -> int:
    c = clone_class(load(ns.file), ns.name)
    save(c, ns.output)
    print(f"{c.name}: {_describe(c)}")
    print(f"wrote {ns.output}")
    return 0


def _cmd_flatten(ns: argparse.Namespace) -> int:
    c = load(ns.file)
    ts = types_of(c)
    if not 1 <= ns.index <= len(ts):
        raise IndexError(
            f"type index {ns.index} out of range 1..{len(ts)} for class {c.name!r}"
        )
    t = ts[ns.index - 1]
    save(t, ns.output)
    print(f"{t.name}: {_describe(t)}")
    print(f"wrote {ns.output}")
    return 0


def _cmd_emit(ns: argparse.Namespace) -> int:
    c = load(ns.file)
    emit_descriptor(c, Lineage(op="emit", inputs=(c.name,)), ns.output)
    print(f"{c.name}: {_describe(c)}")
    print(f"wrote {ns.output}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="oodn",
        description=(
            "Build new classes out of existing ones: union, intersection,"
            " difference, symmetric difference, cloning and type extraction"
            " over persistent class files."
        ),
    )
    common = _Parser(add_help=False)
    common.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        default=Strategy.KEYED.value,
        help="member search strategy (default: keyed)",
    )
    common.add_argument(
        "--stats", action="store_true", help="print comparison counters"
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(
        name: str,
        handler: Callable[[argparse.Namespace], int],
        help_text: str,
        output: bool = True,
        named: bool = True,
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        if named:
            p.add_argument("--name", default=None, help="name for the result class")
        if output:
            p.add_argument(
                "-o", "--output", required=True, help="path of the result file"
            )
        return p

    p = add("validate", _cmd_validate, "check class files", output=False, named=False)
    p.add_argument("files", nargs="+", metavar="FILE")

    p = add("union", _cmd_union, "merge classes, one result type per distinct input type")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = add("intersect", _cmd_intersect, "extract the members common to all classes")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = add("diff", _cmd_diff, "remove one or more classes' members from a class")
    p.add_argument("minuend", metavar="MINUEND")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = add("symdiff", _cmd_symdiff, "keep what each class has that the other lacks")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")

    p = add("clone", _cmd_clone, "copy a class under a new name", named=False)
    p.add_argument("file", metavar="FILE")
    p.add_argument("--name", required=True, help="name of the clone")

    p = add("flatten", _cmd_flatten, "extract one defined type as a homogeneous class", named=False)
    p.add_argument("file", metavar="FILE")
    p.add_argument("--index", type=int, required=True, help="1-based type index")

    p = add("emit", _cmd_emit, "write a descriptor for runtime materializers", named=False)
    p.add_argument("file", metavar="FILE")

    return parser


def run_cli(argv: Sequence[str]) -> int:
    """Run one subcommand; return the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else 0

    try:
        return ns.handler(ns)
    except DoesNotExist as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (
        ParseError,
        SchemaError,
        TooFewInputs,
        InvalidName,
        DuplicateTypes,
        RegistryError,
        IndexError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
