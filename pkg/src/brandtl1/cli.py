"""Batch command line: invariant suites, defect sweeps, one-shot evaluations.

Exit codes: 0 all checks passed / output produced, 1 an invariant failed,
2 usage or input error.  All scalar output is exact "p/q"; runs are
byte-deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .diagonals import defect_sweep, prefix_chain
from .groups import GroupAxiomError
from .l1 import Basis, block, convolve, embed_block, embed_tensor_block, pi
from .serialize import (
    element_from_json,
    element_to_json,
    format_scalar,
    group_from_json,
    parse_scalar,
)
from .splitting import balanced_embed, restrict_to_triples, total_mass
from .verify import CheckResult, run_checks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Bad configuration or input data; exits with status 2."""


def _load_json_text(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {what}: {exc}") from exc


def _load_json_file(path: str, what: str):
    p = Path(path)
    if not p.is_file():
        raise InputError(f"{what} file not found: {path}")
    return _load_json_text(p.read_text(), f"{what} file {path}")


def _load_group(spec: str):
    """Group from an inline JSON object or a file path.

    `GroupAxiomError` passes through so the verify command can report it as
    a failed invariant rather than a usage error.
    """
    if spec.lstrip().startswith("{"):
        obj = _load_json_text(spec, "group spec")
    else:
        obj = _load_json_file(spec, "group spec")
    try:
        return group_from_json(obj)
    except GroupAxiomError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_group_strict(spec: str):
    try:
        return _load_group(spec)
    except GroupAxiomError as exc:
        raise InputError(f"group table is not a group ({exc})") from exc


def _load_element(path: str, group, basis: Basis):
    data = _load_json_file(path, "element")
    try:
        return element_from_json(group, basis, data)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _format_table(rows: list[dict], columns: tuple[str, ...], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])
    return buf.getvalue()


_CHECK_COLUMNS = ("name", "ok", "detail")


def _check_rows(checks: list[CheckResult]) -> list[dict]:
    return [
        {"name": c.name, "ok": "true" if c.ok else "false", "detail": c.detail}
        for c in checks
    ]


def cmd_verify(args) -> int:
    if args.index_bound < 1:
        raise InputError(f"index bound must be >= 1, got {args.index_bound}")
    try:
        group = _load_group(args.group)
    except GroupAxiomError as exc:
        checks = [CheckResult("group.axioms", False, str(exc))]
        _emit(_format_table(_check_rows(checks), _CHECK_COLUMNS, args.format), args.out)
        return EXIT_FAIL
    checks = run_checks(group, index_bound=args.index_bound)
    _emit(_format_table(_check_rows(checks), _CHECK_COLUMNS, args.format), args.out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


_SWEEP_COLUMNS = (
    "k", "F_size", "lambda", "commutator_defect", "e9_rhs", "pi_defect",
    "epsilon_bound_commutator", "epsilon_bound_pi",
)


def _parse_epsilon(text: str) -> Fraction:
    try:
        eps = parse_scalar(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if eps <= 0:
        raise InputError(f"epsilon must be positive, got {text}")
    return eps


def cmd_sweep(args) -> int:
    group = _load_group_strict(args.group)
    eps = _parse_epsilon(args.epsilon)
    if args.length < 1:
        raise InputError(f"sweep length must be >= 1, got {args.length}")
    if args.jobs < 1:
        raise InputError(f"jobs must be >= 1, got {args.jobs}")
    a = _load_element(args.element, group, Basis.TRIPLES)
    reports = defect_sweep(a, prefix_chain(args.length), eps, jobs=args.jobs)
    rows = []
    for k, rep in enumerate(reports, start=1):
        bound_c = rep.epsilon + 4 * rep.epsilon * rep.diagonal_bound
        bound_p = 3 * rep.epsilon + rep.epsilon * rep.diagonal_bound
        rows.append({
            "k": format_scalar(Fraction(k)),
            "F_size": format_scalar(Fraction(len(rep.index.f))),
            "lambda": format_scalar(Fraction(rep.index.lam)),
            "commutator_defect": format_scalar(rep.commutator_defect),
            "e9_rhs": format_scalar(rep.block_bound),
            "pi_defect": format_scalar(rep.pi_defect),
            "epsilon_bound_commutator": format_scalar(bound_c),
            "epsilon_bound_pi": format_scalar(bound_p),
        })
    _emit(_format_table(rows, _SWEEP_COLUMNS, args.format), args.out)
    return EXIT_OK


# op name -> (operand count, operand basis, number of --indices values)
_EVAL_OPS = {
    "convolve-g": (2, Basis.GROUP, 0),
    "convolve-t": (2, Basis.TRIPLES, 0),
    "convolve-s": (2, Basis.SEMIGROUP, 0),
    "pi-g": (1, Basis.GROUP_PAIR, 0),
    "pi-t": (1, Basis.TRIPLES_PAIR, 0),
    "pi-s": (1, Basis.SEMIGROUP_PAIR, 0),
    "block": (1, Basis.TRIPLES, 2),
    "embed-block": (1, Basis.GROUP, 2),
    "embed-tensor": (1, Basis.GROUP_PAIR, 4),
    "balanced-embed": (1, Basis.TRIPLES, 0),
    "restrict": (1, Basis.SEMIGROUP, 0),
    "total-mass": (1, Basis.SEMIGROUP, 0),
}


def _parse_indices(text: str | None, want: int) -> list[int]:
    if want == 0:
        if text:
            raise InputError("this operation takes no --indices")
        return []
    if not text:
        raise InputError(f"this operation needs --indices with {want} values")
    parts = text.split(",")
    if len(parts) != want:
        raise InputError(f"expected {want} indices, got {len(parts)}")
    out = []
    for part in parts:
        try:
            idx = int(part)
        except ValueError as exc:
            raise InputError(f"bad index {part!r}") from exc
        if idx < 0:
            raise InputError(f"indices must be naturals, got {idx}")
        out.append(idx)
    return out


def cmd_eval(args) -> int:
    spec = _EVAL_OPS.get(args.op)
    if spec is None:
        raise InputError(f"unknown operation {args.op!r}; choose from {sorted(_EVAL_OPS)}")
    arity, basis, n_indices = spec
    if len(args.operands) != arity:
        raise InputError(f"{args.op} takes {arity} operand file(s), got {len(args.operands)}")
    group = _load_group_strict(args.group)
    indices = _parse_indices(args.indices, n_indices)
    operands = [_load_element(path, group, basis) for path in args.operands]

    try:
        if args.op.startswith("convolve-"):
            result = convolve(operands[0], operands[1])
        elif args.op.startswith("pi-"):
            result = pi(operands[0])
        elif args.op == "block":
            result = block(operands[0], *indices)
        elif args.op == "embed-block":
            result = embed_block(operands[0], *indices)
        elif args.op == "embed-tensor":
            result = embed_tensor_block(operands[0], *indices)
        elif args.op == "balanced-embed":
            result = balanced_embed(operands[0])
        elif args.op == "restrict":
            result = restrict_to_triples(operands[0])
        else:
            result = total_mass(operands[0])
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    if isinstance(result, Fraction):
        _emit(format_scalar(result) + "\n", args.out)
    else:
        _emit(json.dumps(element_to_json(result), indent=2) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brandtl1",
        description="Exact-arithmetic l1 algebras over Brandt semigroups: "
                    "verify invariants, sweep diagonal defects, evaluate operations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run every invariant suite against a group")
    p.add_argument("--group", required=True, metavar="FILE|JSON", help="group spec file or inline JSON")
    p.add_argument("--index-bound", type=int, default=3, help="exhaustive index range 0..N (default 3)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="defect table along the chain ({0..k}, k)")
    p.add_argument("--group", required=True, metavar="FILE|JSON")
    p.add_argument("--element", required=True, metavar="FILE", help="triple-basis element JSON")
    p.add_argument("--epsilon", default="1/10", metavar="P/Q", help="tolerance (default 1/10)")
    p.add_argument("--length", type=int, required=True, metavar="N", help="chain length (k = 1..N)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1, help="thread pool size for the sweep")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("eval", help="evaluate one operation on element files")
    p.add_argument("op", metavar="OP", help="one of: " + ", ".join(sorted(_EVAL_OPS)))
    p.add_argument("operands", nargs="+", metavar="FILE")
    p.add_argument("--group", required=True, metavar="FILE|JSON")
    p.add_argument("--indices", metavar="I,J,...", help="block indices for block/embed operations")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
