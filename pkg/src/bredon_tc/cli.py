"""``bredon-tc`` command line.

Exit codes: 0 the property holds, 1 it is refuted (a witness is printed),
2 invalid input. With ``--json`` stdout carries one JSON report.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import __version__
from .bredon import MAX_RESOLUTION_RANK, cd_d_report
from .errors import BredonTCError
from .groups import parse_group
from .joins import wedge_check
from .principality import is_principal, property_n_witness_search
from .selftest import first_failure, run_selftest
from .tcbounds import tc_bounds

SCHEMA = 1

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INVALID = 2

CITE_PRINCIPAL = "principal group: every index [H : H ∩ H'] in the family is 1 or infinite"
CITE_KLEIN = "Klein bottle group: c is not in Z(x) while c^2 = z is"
CITE_ZN = "Z^n is a principal group"
CITE_PROPERTY_N = "Property N implies principal"
CITE_CDD = "cd_D(Z^k x Z^k) = cd(Z^k) = k"
CITE_JOIN = "the (k+1)-fold join of a discrete set is a wedge of k-spheres"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 as well; keep stderr terse
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _jsonable(x: Any) -> Any:
    if isinstance(x, float) and x == float("inf"):
        return "infinite"
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def make_report(command: str, group, parameters: dict, result: dict, certificates: dict, citations: list[str], wall: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "group": None if group is None else str(group),
        "parameters": parameters,
        "result": _jsonable(result),
        "certificates": _jsonable(certificates),
        "citations": citations,
        "wall_time": round(wall, 4),
        "version": __version__,
    }


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(lines))


def cmd_principal(args) -> int:
    t0 = time.perf_counter()
    group = parse_group(args.group, args.rank)
    v = is_principal(group)
    params = {"rank": group.rank, "radius": args.radius, "max_power": args.max_power}
    certs = {"case": v.case, "transitions": [t.to_json() for t in v.transitions]}
    result: dict = {"verdict": v.verdict}
    if v.witness is not None:
        result["witness"] = v.witness.to_json()
    if v.condition_b is not None:
        result["condition_b"] = v.condition_b
    if args.radius is not None:
        w = property_n_witness_search(group, args.radius, args.max_power)
        certs["property_n_search"] = {
            "radius": args.radius,
            "max_power": args.max_power,
            "witness": None if w is None else w.to_json(),
        }
    cites = [CITE_PRINCIPAL]
    if group.kind == "klein":
        cites.append(CITE_KLEIN)
    elif group.is_abelian:
        cites.append(CITE_ZN)
    else:
        cites.append(CITE_PROPERTY_N)
    report = make_report("principal", group, params, result, certs, cites, time.perf_counter() - t0)
    lines = [f"{group}: {v.verdict}"]
    if v.witness is not None:
        w = v.witness.to_json()
        lines.append(f"witness: a={w['a']} S={{{', '.join(w['S'])}}} n={w['n']}")
    if v.condition_b is not None:
        lines.append(f"condition (b): index {v.condition_b['index']} (coset representative {v.condition_b['witness']})")
    _emit(report, args.json, lines)
    return EXIT_OK if v.is_principal else EXIT_REFUTED


def cmd_cdd(args) -> int:
    t0 = time.perf_counter()
    k = args.k if args.k is not None else args.rank
    if k is None or not 1 <= k <= MAX_RESOLUTION_RANK:
        raise BredonTCError(f"k must be in 1..{MAX_RESOLUTION_RANK}")
    r = cd_d_report(k)
    result = {
        "ranks": r.ranks,
        "torsion": [list(g.torsion) for g in r.groups],
        "cd_d": r.cd_d,
        "model_length": r.upper,
    }
    report = make_report("cdd", f"Z^{k}", {"k": k}, result, {"resolution": "cubical, d o d = 0 checked"}, [CITE_CDD], time.perf_counter() - t0)
    _emit(report, args.json, [f"Z^{k}: ranks {r.ranks}, cd_D = {r.cd_d}"])
    return EXIT_OK


def cmd_tc(args) -> int:
    t0 = time.perf_counter()
    group = parse_group(args.group, args.rank)
    r = tc_bounds(group)
    report = make_report("tc", group, {"rank": group.rank}, r.to_json(), r.certificates, list(r.citations), time.perf_counter() - t0)
    if r.exact is not None:
        line = f"{group}: TC = {r.exact} ({r.lower_tag} / {r.upper_tag})"
    else:
        line = f"{group}: {r.lower} <= TC <= {r.upper} ({r.lower_tag} / {r.upper_tag})"
    _emit(report, args.json, [line] + [f"note: {n}" for n in r.notes])
    return EXIT_OK


def cmd_join(args) -> int:
    t0 = time.perf_counter()
    if args.m is None or args.k is None or args.m < 1 or args.k < 0:
        raise BredonTCError("join needs --m >= 1 and --k >= 0")
    w = wedge_check(args.m, args.k)
    report = make_report("join", None, {"m": args.m, "k": args.k}, w.to_json(), {"euler_check": True}, [CITE_JOIN], time.perf_counter() - t0)
    lines = [f"join of {args.k + 1} copies of {args.m} points"]
    lines += [f"  H~_{d} = {g}" for d, g in enumerate(w.groups)]
    lines.append("wedge formula: " + ("pass" if w.passed else "FAIL"))
    _emit(report, args.json, lines)
    return EXIT_OK if w.passed else EXIT_REFUTED


def cmd_selftest(args) -> int:
    t0 = time.perf_counter()
    results = run_selftest()
    bad = first_failure(results)
    result = {"passed": bad is None, "first_failure": None if bad is None else bad.name}
    report = make_report("selftest", None, {}, result, {"checks": [r.to_json() for r in results]}, [], time.perf_counter() - t0)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.wall_time:.3f}s) {'' if r.passed else r.detail}".rstrip() for r in results]
    _emit(report, args.json, lines)
    if bad is not None:
        print(f"first failing invariant: {bad.name}", file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bredon-tc", description="Centralizers, principality, Bredon cohomology and TC bounds.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, group=True):
        if group:
            sp.add_argument("--group", required=True, help="z, free, klein or heisenberg")
        sp.add_argument("--rank", type=int, default=None)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("principal", help="decide principality")
    common(sp)
    sp.add_argument("--radius", type=int, default=None, help="also run the Property N search")
    sp.add_argument("--max-power", type=int, default=4, dest="max_power")
    sp.set_defaults(func=cmd_principal)

    sp = sub.add_parser("cdd", help="Bredon cohomology of Z^k x Z^k")
    common(sp, group=False)
    sp.add_argument("--k", type=int, default=None)
    sp.set_defaults(func=cmd_cdd)

    sp = sub.add_parser("tc", help="TC bound report")
    common(sp)
    sp.set_defaults(func=cmd_tc)

    sp = sub.add_parser("join", help="homology of a finite join")
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_join)

    sp = sub.add_parser("selftest", help="run the invariant suite")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BredonTCError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
