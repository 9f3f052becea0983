"""Command line front end.

Subcommands: `lattice` explores the dominance lattice, `code` analyzes a
generator matrix file, `invariants` emits B/W tables and R-weight chains,
`verify` runs the oracle-vs-closed-form suites. Output goes to stdout in
JSON by default (`--format text|csv|dot` otherwise); diagnostics go to
stderr. Identical inputs produce byte-identical outputs.

Exit codes: 0 success, 1 usage or input error, 2 enumeration cap exceeded,
3 internal cross-check failure (a violated theorem, never user error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import anticodes as ac
from . import dominance as comp
from . import invariants as inv
from . import matrices, oracle, verification
from .codes import Code, analysis_record
from .errors import CapExceeded, InternalCheckError, guard_cap
from .ring import METRICS

CAP_ENV_VAR = "LEE_ANTICODES_CAP"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this tool reserves 2 for caps."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "text", "csv", "dot"),
        default=None,
        help="output format (default json; hasse defaults to dot)",
    )
    common.add_argument(
        "--cap",
        type=int,
        default=None,
        help=f"enumeration cap; overrides the {CAP_ENV_VAR} environment variable",
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed for sampled suites (reserved)"
    )

    parser = _Parser(prog="lee-anticodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lat = sub.add_parser("lattice", parents=[common], help="dominance lattice tools")
    lat.add_argument("--parts", type=int, required=True, help="number of parts L")
    lat.add_argument("--sum", type=int, required=True, dest="total", help="total n")
    lat.add_argument(
        "action", choices=("enum", "hasse", "mobius", "covers", "chains")
    )

    cod = sub.add_parser("code", parents=[common], help="analyze a generator matrix")
    cod.add_argument("path", help="matrix file: header `p s n`, then rows")
    cod.add_argument("action", choices=("analyze", "dual", "distance", "optimal"))
    cod.add_argument("--metric", choices=METRICS, default=None)

    invp = sub.add_parser(
        "invariants", parents=[common], help="B/W tables and R-weights"
    )
    invp.add_argument("path", help="matrix file: header `p s n`, then rows")
    invp.add_argument("action", choices=("moments", "distribution", "rweights", "ghw"))

    ver = sub.add_parser("verify", parents=[common], help="oracle verification suites")
    ver.add_argument(
        "scope", choices=("lattice", "counting", "anticodes", "invariants", "all")
    )
    ver.add_argument("--p", type=int, default=3)
    ver.add_argument("--s", type=int, default=2)
    ver.add_argument("--n", type=int, default=2)
    ver.add_argument("--parts", type=int, default=3)
    ver.add_argument("--sum", type=int, default=3, dest="total")

    return parser


def _resolve_cap(args) -> int | None:
    if args.cap is not None:
        if args.cap <= 0:
            raise ValueError("cap must be positive")
        return args.cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None and env.strip():
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}")
        if value <= 0:
            raise ValueError(f"{CAP_ENV_VAR} must be positive, got {value}")
        return value
    return None


def _cap_or(cap: int | None, default: int) -> int:
    return default if cap is None else cap


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _comp_str(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def _comp_csv(a) -> str:
    return ",".join(str(x) for x in a)


def _unsupported(fmt: str, action: str) -> ValueError:
    return ValueError(f"format {fmt!r} is not available for the {action} action")


def cmd_lattice(args, cap: int | None) -> str:
    parts, total, action = args.parts, args.total, args.action
    fmt = args.format or ("dot" if action == "hasse" else "json")
    capv = _cap_or(cap, comp.DEFAULT_LATTICE_CAP)
    guard_cap(comp.composition_count(parts, total), capv, "lattice size")
    elems = comp.compositions(parts, total)

    if action == "enum":
        if fmt == "json":
            return _dump_json(
                {
                    "parts": parts,
                    "sum": total,
                    "count": len(elems),
                    "elements": [list(a) for a in elems],
                }
            )
        if fmt == "text":
            return "".join(_comp_csv(a) + "\n" for a in elems)
        if fmt == "csv":
            return "a\n" + "".join(_comp_csv(a) + "\n" for a in elems)
        raise _unsupported(fmt, action)

    if action == "hasse":
        dot = comp.hasse_dot(parts, total, capv)
        if fmt in ("dot", "text"):
            return dot
        if fmt == "json":
            return _dump_json({"parts": parts, "sum": total, "dot": dot})
        raise _unsupported(fmt, action)

    if action == "mobius":
        entries = [
            (a, b, comp.mobius(a, b))
            for a in elems
            for b in elems
            if comp.dominance_leq(a, b)
        ]
        if fmt == "json":
            return _dump_json(
                {
                    "parts": parts,
                    "sum": total,
                    "entries": [
                        {"a": list(a), "b": list(b), "mu": mu} for a, b, mu in entries
                    ],
                }
            )
        if fmt == "text":
            return "".join(
                f"mu({_comp_str(a)}, {_comp_str(b)}) = {mu}\n" for a, b, mu in entries
            )
        if fmt == "csv":
            return "a;b;mu\n" + "".join(
                f"{_comp_csv(a)};{_comp_csv(b)};{mu}\n" for a, b, mu in entries
            )
        raise _unsupported(fmt, action)

    if action == "covers":
        if fmt == "json":
            return _dump_json(
                {
                    "parts": parts,
                    "sum": total,
                    "entries": [
                        {"a": list(a), "covers": [list(b) for b in comp.covers(a)]}
                        for a in elems
                    ],
                }
            )
        if fmt == "text":
            return "".join(
                f"{_comp_str(a)} -> "
                + " ".join(_comp_str(b) for b in comp.covers(a))
                + "\n"
                for a in elems
            )
        if fmt == "csv":
            return "a;b\n" + "".join(
                f"{_comp_csv(a)};{_comp_csv(b)}\n" for a in elems for b in comp.covers(a)
            )
        raise _unsupported(fmt, action)

    # chains
    length = comp.maximal_chain_length(parts, total)
    count = 0
    for chain in comp.maximal_chains(parts, total, capv):
        if len(chain) - 1 != length:
            raise InternalCheckError(
                f"maximal chain of length {len(chain) - 1}, expected {length}"
            )
        count += 1
    if fmt == "json":
        return _dump_json(
            {"parts": parts, "sum": total, "count": count, "length": length}
        )
    if fmt == "text":
        return f"{count} maximal chains, all of length {length}\n"
    if fmt == "csv":
        return f"count;length\n{count};{length}\n"
    raise _unsupported(fmt, action)


def _load_code(path: str) -> Code:
    with open(path, encoding="utf-8") as handle:
        return Code(matrices.parse_matrix(handle.read()))


def _flatten(record: dict, prefix: str = ""):
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        else:
            yield name, value


def _record_output(record: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(record)
    if fmt == "text":
        return "".join(f"{k} = {json.dumps(v)}\n" for k, v in _flatten(record))
    if fmt == "csv":
        return "key;value\n" + "".join(
            f"{k};{json.dumps(v)}\n" for k, v in _flatten(record)
        )
    raise _unsupported(fmt, "this")


def cmd_code(args, cap: int | None) -> str:
    fmt = args.format or "json"
    capv = _cap_or(cap, matrices.DEFAULT_ENUM_CAP)
    code = _load_code(args.path)
    params = code.params

    if args.action == "analyze":
        return _record_output(analysis_record(code, capv), fmt)

    if args.action == "dual":
        dual = code.dual()
        if fmt == "text":
            return matrices.format_matrix(dual.gen)
        record = {
            "p": params.p,
            "s": params.s,
            "n": dual.n,
            "generator_rows": [list(row) for row in dual.gen.rows],
            "subtype": list(dual.subtype),
            "extended_subtype": list(dual.extended_subtype),
        }
        return _record_output(record, fmt)

    metrics = [args.metric] if args.metric else list(METRICS)

    if args.action == "distance":
        guard_cap(code.size, capv, "codeword enumeration")
        per_metric = {}
        for metric in metrics:
            per_metric[metric] = {
                "min_distance": None
                if code.rank == 0
                else code.min_distance(metric, capv),
                "max_weight": code.max_weight(metric, capv),
            }
        record = {"p": params.p, "s": params.s, "n": code.n, "metrics": per_metric}
        if fmt == "csv":
            lines = ["metric;min_distance;max_weight"]
            for metric in metrics:
                row = per_metric[metric]
                mind = "" if row["min_distance"] is None else row["min_distance"]
                lines.append(f"{metric};{mind};{row['max_weight']}")
            return "\n".join(lines) + "\n"
        return _record_output(record, fmt)

    # optimal
    if args.metric is None and params.p == 2:
        metrics = [m for m in metrics if m != "lee"]
    guard_cap(code.size, capv, "codeword enumeration")
    verdicts = {}
    for metric in metrics:
        verdicts[metric] = {
            "optimal": ac.is_optimal(code, metric, capv),
            "bound": ac.weight_bound(code, metric),
            "max_weight": code.max_weight(metric, capv),
        }
    record = {"p": params.p, "s": params.s, "n": code.n, "verdicts": verdicts}
    if fmt == "csv":
        lines = ["metric;optimal;bound;max_weight"]
        for metric in metrics:
            row = verdicts[metric]
            lines.append(
                f"{metric};{str(row['optimal']).lower()};{row['bound']};"
                f"{row['max_weight']}"
            )
        return "\n".join(lines) + "\n"
    return _record_output(record, fmt)


def cmd_invariants(args, cap: int | None) -> str:
    fmt = args.format or "json"
    capv = _cap_or(cap, inv.DEFAULT_CENSUS_CAP)
    code = _load_code(args.path)
    params = code.params

    if args.action in ("moments", "distribution"):
        table = inv.build_invariant_table(code, capv)
        if fmt == "json":
            return _dump_json(inv.table_json_dict(table))
        if fmt == "csv":
            return inv.table_csv(table)
        if fmt == "text":
            lines = []
            for a in comp.compositions(params.s + 1, code.n):
                for j in range(table.rank + 1):
                    lines.append(
                        f"a={_comp_str(a)} j={j} "
                        f"B={table.binomial_moments[(a, j)]} "
                        f"W={table.weight_distributions[(a, j)]}"
                    )
            return "\n".join(lines) + "\n"
        raise _unsupported(fmt, args.action)

    ranks = range(1, code.rank + 1)
    r_weights = [inv.r_weight(code, r) for r in ranks]
    r_free = [inv.r_weight_free(code, r) for r in ranks]
    ghw_list = [a[0] for a in r_free]

    if args.action == "rweights":
        record = {
            "p": params.p,
            "s": params.s,
            "n": code.n,
            "rank": code.rank,
            "linear_extension": comp.LINEAR_EXTENSION_NAME,
            "r_weights": [list(a) for a in r_weights],
            "r_weights_free": [list(a) for a in r_free],
            "ghw": ghw_list,
            "minimal_valid": [
                [list(a) for a in inv.r_weight_minimal_set(code, r)] for r in ranks
            ],
        }
        if fmt == "json":
            return _dump_json(record)
        if fmt == "text":
            lines = [
                f"r={r} d={_comp_str(d)} d_free={_comp_str(df)} ghw={g}"
                for r, d, df, g in zip(ranks, r_weights, r_free, ghw_list)
            ]
            return "\n".join(lines) + "\n" if lines else ""
        if fmt == "csv":
            lines = ["r;d_r;d_r_free;ghw"]
            lines.extend(
                f"{r};{_comp_csv(d)};{_comp_csv(df)};{g}"
                for r, d, df, g in zip(ranks, r_weights, r_free, ghw_list)
            )
            return "\n".join(lines) + "\n"
        raise _unsupported(fmt, args.action)

    # ghw
    record = {
        "p": params.p,
        "s": params.s,
        "n": code.n,
        "rank": code.rank,
        "ghw": ghw_list,
    }
    if fmt == "json":
        return _dump_json(record)
    if fmt == "text":
        return "ghw = " + " ".join(str(g) for g in ghw_list) + "\n"
    if fmt == "csv":
        lines = ["r;ghw"]
        lines.extend(f"{r};{g}" for r, g in zip(ranks, ghw_list))
        return "\n".join(lines) + "\n"
    raise _unsupported(fmt, args.action)


def cmd_verify(args, cap: int | None) -> tuple[str, int]:
    fmt = args.format or "json"
    capv = _cap_or(cap, oracle.DEFAULT_CENSUS_CAP)
    scope = args.scope
    if scope == "lattice":
        results = verification.verify_lattice(args.parts, args.total)
        parameters = {"parts": args.parts, "sum": args.total}
    elif scope == "counting":
        results = verification.verify_counting(args.p, args.s, args.n, capv)
        parameters = {"p": args.p, "s": args.s, "n": args.n}
    elif scope == "anticodes":
        results = verification.verify_anticodes(args.p, args.s, args.n, capv)
        parameters = {"p": args.p, "s": args.s, "n": args.n}
    elif scope == "invariants":
        results = verification.verify_invariants(args.p, args.s, args.n, capv)
        parameters = {"p": args.p, "s": args.s, "n": args.n}
    else:
        results = verification.verify_all(
            args.p, args.s, args.n, args.parts, args.total
        )
        parameters = {
            "p": args.p,
            "s": args.s,
            "n": args.n,
            "parts": args.parts,
            "sum": args.total,
        }
    ok = all(r.passed for r in results)
    for r in results:
        if not r.passed:
            print(f"counterexample [{r.name}]: {r.detail}", file=sys.stderr)
    if fmt == "json":
        out = _dump_json(
            {
                "scope": scope,
                "parameters": parameters,
                "results": [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                "ok": ok,
            }
        )
    elif fmt == "text":
        lines = [
            ("PASS " if r.passed else "FAIL ") + r.name
            + ("" if r.passed else f": {r.detail}")
            for r in results
        ]
        lines.append("ok" if ok else f"failures: {sum(not r.passed for r in results)}")
        out = "\n".join(lines) + "\n"
    elif fmt == "csv":
        lines = ["status;name;detail"]
        lines.extend(
            f"{'pass' if r.passed else 'fail'};{r.name};{r.detail}" for r in results
        )
        out = "\n".join(lines) + "\n"
    else:
        raise _unsupported(fmt, "verify")
    return out, 0 if ok else 3


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        cap = _resolve_cap(args)
        if args.command == "lattice":
            out, status = cmd_lattice(args, cap), 0
        elif args.command == "code":
            out, status = cmd_code(args, cap), 0
        elif args.command == "invariants":
            out, status = cmd_invariants(args, cap), 0
        else:
            out, status = cmd_verify(args, cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return status


def run() -> None:
    raise SystemExit(main())
