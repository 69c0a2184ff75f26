"""Command-line interface over the whole library.

Every subcommand prints one machine-readable report on stdout; JSON is
the stable contract, ``csv`` and ``table`` are flat renderings of the
same payload.  Identical invocations produce byte-identical output.
Exit codes: 0 success, 2 usage error, 1 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chain import DomainError, GuardExceeded, PartialMap, RangeSet
from . import verify as verify_mod
from .completability import (
    build_extension,
    complete_extensions,
    is_completable,
)
from .enumeration import count_maps, enumerate_semigroup, search_guard
from .generators import minimum_generating_set, rank_by_formula, rank_by_search
from .green import RELATIONS, green_classes, green_classes_by_ideals
from .isomorphism import (
    find_isomorphism,
    induced_range_bijection,
    isomorphism_condition,
)
from .regularity import is_semigroup_regular, regular_elements


def _parse_Y(raw: str, n: int) -> RangeSet:
    try:
        members = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise DomainError(f"Y must be a comma list of integers, got {raw!r}")
    return RangeSet(n, members)  # rejects unsorted/duplicate/out-of-range


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "csv":
        lines = ["key,value"]
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                text = json.dumps(value, separators=(",", ":"))
            else:
                text = json.dumps(value)
            if "," in text or '"' in text:
                text = '"' + text.replace('"', '""') + '"'
            lines.append(f"{key},{text}")
        return "\n".join(lines)
    # table: for human eyes only
    width = max(len(k) for k in payload)
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"{key.ljust(width)}  ({len(value)} rows)")
            for item in value:
                lines.append("  " + json.dumps(item, separators=(",", ":")))
        else:
            lines.append(f"{key.ljust(width)}  {json.dumps(value)}")
    return "\n".join(lines)


def _add_common(sub: argparse.ArgumentParser, with_Y: bool = True) -> None:
    sub.add_argument("-n", type=int, required=True, help="chain size")
    if with_Y:
        sub.add_argument("-Y", required=True,
                         help="range set, strictly increasing comma list")
    sub.add_argument("--format", choices=("json", "csv", "table"),
                     default="json")
    sub.add_argument("--seedless", action="store_true",
                     help="assert deterministic output (always on; no-op)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ordrange",
        description="Monotone self-maps of a finite chain with restricted "
                    "range: enumeration, regularity, Green's relations, "
                    "completability, rank and isomorphism.")
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("card", help="number of elements")
    _add_common(s)

    s = subs.add_parser("enumerate", help="list every element")
    _add_common(s)

    s = subs.add_parser("regular", help="regular part and regularity verdict")
    _add_common(s)
    s.add_argument("--elements", action="store_true",
                   help="include the regular elements themselves")

    s = subs.add_parser("green", help="egg-box report for one relation")
    _add_common(s)
    s.add_argument("--relation", choices=RELATIONS, default="D")
    s.add_argument("--oracle", action="store_true",
                   help="use the ideal-based oracle instead of the "
                        "characterized predicates")
    s.add_argument("--check", action="store_true",
                   help="compute both routes and fail on any mismatch")

    s = subs.add_parser("complete", help="completability of a partial map")
    _add_common(s)
    s.add_argument("--theta", required=True,
                   help='partial map as JSON {"domain":[...],"images":[...]}')

    s = subs.add_parser("rank", help="rank of the semigroup")
    _add_common(s)
    s.add_argument("--method", choices=("formula", "constructed", "brute"),
                   default="formula")
    s.add_argument("--check", action="store_true",
                   help="cross-validate all applicable methods")

    s = subs.add_parser("gens", help="a minimum generating set with provenance")
    _add_common(s)

    s = subs.add_parser("iso", help="isomorphism classification for two range sets")
    _add_common(s)
    s.add_argument("-Z", required=True, help="second range set")
    s.add_argument("--n2", type=int, default=None,
                   help="chain size for Z (defaults to -n)")
    s.add_argument("--search", action="store_true",
                   help="also run the brute-force search and report a mapping")

    s = subs.add_parser("verify", help="run every oracle-vs-characterization "
                                       "cross-check")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-Y", default=None,
                   help="restrict to a single range set")
    s.add_argument("--all", action="store_true",
                   help="sweep every nonempty range set of the chain")
    s.add_argument("--format", choices=("json", "csv", "table"),
                   default="table")
    s.add_argument("--seedless", action="store_true")
    return p


def _cmd_card(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    return {"count": count_maps(args.n, len(Y))}


def _cmd_enumerate(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    table = enumerate_semigroup(args.n, Y)
    return {
        "n": args.n,
        "Y": list(Y.members),
        "count": len(table),
        "elements": [list(f.images) for f in table.elements],
    }


def _cmd_regular(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    reg = regular_elements(args.n, Y)
    payload = {
        "n": args.n,
        "Y": list(Y.members),
        "count": count_maps(args.n, len(Y)),
        "regular_count": len(reg),
        "is_regular_semigroup": is_semigroup_regular(args.n, Y),
    }
    if args.elements:
        payload["elements"] = [list(f.images) for f in reg]
    return payload


def _cmd_green(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    table = enumerate_semigroup(args.n, Y)
    box = (green_classes_by_ideals(args.relation, table) if args.oracle
           else green_classes(args.relation, table, Y))
    if args.check:
        other = (green_classes(args.relation, table, Y) if args.oracle
                 else green_classes_by_ideals(args.relation, table))
        if box.as_sets() != other.as_sets():
            raise _CheckFailure(
                f"relation {args.relation}: characterized and oracle "
                "partitions differ")
    return {
        "relation": box.relation,
        "classes": [list(c) for c in box.classes],
        "meta": list(box.meta),
    }


def _cmd_complete(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    try:
        raw = json.loads(args.theta)
        theta = PartialMap(args.n, tuple(raw["domain"]), tuple(raw["images"]))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DomainError(f"bad theta payload: {exc}")
    verdict = is_completable(theta, Y)
    witness = build_extension(theta, Y)
    extensions = complete_extensions(theta, Y)
    if verdict != bool(extensions) or verdict != (witness is not None):
        raise _CheckFailure("criterion and exhaustive search disagree")
    return {
        "completable": verdict,
        "witness": list(witness.images) if witness else None,
        "extensions": len(extensions),
    }


def _cmd_rank(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    r = len(Y)
    if args.method == "formula":
        value = rank_by_formula(args.n, Y)
    elif args.method == "constructed":
        value = len(minimum_generating_set(args.n, Y))
    else:
        value = rank_by_search(args.n, Y)
    payload = {"rank": value}
    if args.check:
        others = {"formula": rank_by_formula(args.n, Y)}
        if 1 < r < args.n:
            others["constructed"] = len(minimum_generating_set(args.n, Y))
        if count_maps(args.n, r) <= search_guard():
            others["brute"] = rank_by_search(args.n, Y)
        if len(set(others.values())) != 1 or value not in others.values():
            raise _CheckFailure(f"rank methods disagree: {others}")
        payload["checked"] = sorted(others)
    return payload


def _cmd_gens(args) -> dict:
    Y = _parse_Y(args.Y, args.n)
    gens = minimum_generating_set(args.n, Y)
    return {
        "n": args.n,
        "Y": list(Y.members),
        "rank": rank_by_formula(args.n, Y),
        "size": len(gens),
        "members": [g.as_dict() for g in gens.members],
    }


def _cmd_iso(args) -> dict:
    n2 = args.n if args.n2 is None else args.n2
    Y = _parse_Y(args.Y, args.n)
    Z = _parse_Y(args.Z, n2)
    cond = isomorphism_condition(args.n, Y, n2, Z)
    payload = {
        "isomorphic": cond is not None,
        "condition": cond,
        "mapping": None,
        "induced_theta": None,
    }
    if args.search:
        S = enumerate_semigroup(args.n, Y)
        T = enumerate_semigroup(n2, Z)
        phi = find_isomorphism(S, T)
        if (phi is not None) != (cond is not None):
            raise _CheckFailure(
                "classification and brute-force search disagree")
        if phi is not None:
            payload["mapping"] = [[a, phi[a]] for a in sorted(phi)]
            theta = induced_range_bijection(phi, S, T, Y, Z)
            payload["induced_theta"] = {str(y): theta[y] for y in sorted(theta)}
    return payload


def _cmd_verify(args) -> dict:
    if args.all:
        sets = None
    elif args.Y is not None:
        sets = [_parse_Y(args.Y, args.n)]
    else:
        raise DomainError("verify needs --all or -Y")
    report = verify_mod.run_all(args.n, sets)
    for line in report["lines"]:
        print(line)
    if report["failures"]:
        raise _CheckFailure(f"{report['failures']} cross-checks failed")
    return {"n": args.n, "checks": report["checks"], "failures": 0}


class _CheckFailure(RuntimeError):
    """An internal cross-validation failed; must never happen."""


_COMMANDS = {
    "card": _cmd_card,
    "enumerate": _cmd_enumerate,
    "regular": _cmd_regular,
    "green": _cmd_green,
    "complete": _cmd_complete,
    "rank": _cmd_rank,
    "gens": _cmd_gens,
    "iso": _cmd_iso,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = _COMMANDS[args.command](args)
    except (DomainError, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _CheckFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    print(_render(payload, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
