"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or exactness check fails,
2 for unreadable or malformed input (argparse usage errors included).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .abelian import FGAbGroup, StructureError, WellDefinednessError, check_exact, render_group
from .catalog import CatalogError, verify
from .documents import SchemaError, parse_complex, parse_module, parse_pairing, parse_sequence
from .genus import GENERA, characteristic_series, fgl_isomorphism, two_adic_obstruction
from .komodule import MissingDataError, RelationError, wood_check
from .ltheory import HalvingError, alt_l12, free_l_groups, l_groups, l_product, tau_map


class InputError(Exception):
    """Bad input; reported on stderr with exit code 2."""


class CheckFailed(Exception):
    """A verification did not hold; exit code 1."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_module(path: str):
    try:
        return parse_module(_read(path))
    except (SchemaError, RelationError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _group_line(label: str, g: FGAbGroup) -> str:
    return f"{label}: {json.dumps(list(g.iso_type))}  {render_group(g.iso_type)}"


def _coords(text: str) -> list[int]:
    text = text.strip().strip("[]").strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"cannot read coordinates {text!r}; use a comma-separated list like 1,0") from None


def cmd_lgroups(args: argparse.Namespace) -> int:
    m = _load_module(args.file)
    out = []
    lg = l_groups(m)
    for i, g in enumerate(lg.slots):
        out.append(_group_line(f"L{i}", g))
    status = 0
    if args.free:
        try:
            f = free_l_groups(m)
        except MissingDataError as exc:
            raise InputError(f"{args.file}: {exc}") from None
        out.append(_group_line("C", f.C))
        out.append(_group_line("L1h", f.l1h))
        if f.l2h_group is not None:
            out.append(_group_line("L2h", f.l2h_group))
        else:
            cands = f.l2h.candidates
            listed = " | ".join(render_group(c) for c in cands) if cands else "not computed (C has 2-torsion)"
            out.append(f"L2h: undetermined  candidates: {listed}")
        out.append(_group_line("L3h", f.l3h))
    if args.complex:
        try:
            d = parse_complex(_read(args.complex), m)
        except SchemaError as exc:
            raise InputError(f"{args.complex}: {exc}") from None
        wood = wood_check(d)
        out.append(f"wood: {wood.describe()}")
        if wood.exact:
            a1, a2 = alt_l12(d)
            out.append(_group_line("alt L1", a1))
            out.append(_group_line("alt L2", a2))
            if a1.iso_type != lg.l1.iso_type or a2.iso_type != lg.l2.iso_type:
                out.append("alt: MISMATCH")
                status = 1
        else:
            status = 1
    print("\n".join(out))
    return status


def cmd_tau(args: argparse.Namespace) -> int:
    m = _load_module(args.file)
    if args.degree < 0:
        raise InputError("--degree must be non-negative")
    t = tau_map(m, args.degree)
    print(_group_line("source", t.source))
    print(_group_line("target", t.target))
    print(f"matrix: {json.dumps([list(r) for r in t.matrix])}")
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    a_mod, b_mod = _load_module(args.afile), _load_module(args.bfile)
    try:
        datum = parse_pairing(_read(args.pairfile), a_mod, b_mod)
    except (SchemaError, RelationError) as exc:
        raise InputError(f"{args.pairfile}: {exc}") from None
    la, lb = l_groups(a_mod), l_groups(b_mod)
    try:
        a = la.slot(args.i).element(_coords(args.a))
        b = lb.slot(args.j).element(_coords(args.b))
    except (ValueError, StructureError) as exc:
        raise InputError(str(exc)) from None
    try:
        c = l_product(args.i, args.j, a, b, datum)
    except MissingDataError as exc:
        raise InputError(str(exc)) from None
    except HalvingError as exc:
        raise CheckFailed(str(exc)) from None
    print(f"L{(args.i + args.j) % 4}: {json.dumps(list(c.coords))}  in {render_group(c.group.invariants)}")
    return 0


def cmd_check_exact(args: argparse.Namespace) -> int:
    try:
        homs = parse_sequence(_read(args.seqfile))
    except SchemaError as exc:
        raise InputError(f"{args.seqfile}: {exc}") from None
    rep = check_exact(homs)
    print(rep.describe())
    return 0 if rep.exact else 1


def cmd_verify_catalog(args: argparse.Namespace) -> int:
    params = {}
    for p in args.param or []:
        key, sep, value = p.partition("=")
        if not sep:
            raise InputError(f"--param expects name=value, got {p!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise InputError(f"--param {key}: {value!r} is not an integer") from None
    try:
        rep = verify(args.name, **params)
    except CatalogError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(json.dumps(rep.to_dict(), ensure_ascii=False, indent=2, default=str))
    else:
        print(rep.to_text())
    return 0 if rep.passed else 1


def cmd_genus(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise InputError("--order must be non-negative")
    k = characteristic_series(GENERA[args.series](max(args.order + 2, 1)), args.order)
    for i, c in enumerate(k.coeffs):
        print(f"{i}: {c}")
    return 0


def cmd_ahr(args: argparse.Namespace) -> int:
    try:
        rep = two_adic_obstruction(args.c, args.kmax)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print("k v2 nonzero")
    for r in rep.rows:
        print(f"{r.k} {r.valuation if r.valuation is not None else 'inf'} {'yes' if r.nonzero else 'no'}")
    print(rep.conclusion())
    return 0


def cmd_fgl_iso(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise InputError("--k must be at least 1")
    if args.order < 1:
        raise InputError("--order must be at least 1")
    res = fgl_isomorphism(args.k, args.order)
    for i in range(1, args.order + 1):
        print(f"{i}: {res.series[i]}")
    print(f"integral: {'yes' if res.integral else 'no'}")
    print(f"equation holds: {'yes' if res.verified else 'no'}")
    return 0 if res.verified else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kltheory", description="L-groups of real C*-algebras from K-theory data.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lgroups", help="L-groups of a KO-module document")
    s.add_argument("file")
    s.add_argument("--free", action="store_true", help="also compute free L-groups (needs a unit)")
    s.add_argument("--complex", metavar="CFILE", help="complexification document; runs the Wood check")
    s.set_defaults(func=cmd_lgroups)

    s = sub.add_parser("tau", help="matrix of the map K_n -> L_n")
    s.add_argument("file")
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("product", help="product of L-classes through a K-theory pairing")
    s.add_argument("afile")
    s.add_argument("bfile")
    s.add_argument("pairfile")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--a", required=True, metavar="COORDS")
    s.add_argument("--b", required=True, metavar="COORDS")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("check-exact", help="exactness of a sequence document")
    s.add_argument("seqfile")
    s.set_defaults(func=cmd_check_exact)

    s = sub.add_parser("verify-catalog", help="recompute catalog entries against their expected tables")
    s.add_argument("name", nargs="?")
    s.add_argument("--param", action="append", metavar="NAME=VALUE")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_catalog)

    s = sub.add_parser("genus", help="characteristic series coefficients")
    s.add_argument("--series", choices=sorted(GENERA), required=True)
    s.add_argument("--order", type=int, default=20)
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("ahr", help="2-adic valuations of the moment obstruction")
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--kmax", type=int, required=True)
    s.set_defaults(func=cmd_ahr)

    s = sub.add_parser("fgl-iso", help="isomorphism between multiplicative formal group laws")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--order", type=int, default=32)
    s.set_defaults(func=cmd_fgl_iso)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RelationError, WellDefinednessError, StructureError, MissingDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
