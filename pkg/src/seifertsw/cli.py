"""Command-line front-end.

Output conventions: data on stdout, diagnostics on stderr, rationals always
printed as p/q (plain integer when the denominator is 1), never as
decimals. Exit codes: 0 success, 2 parse error, 3 domain error with the
error name on stderr. Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from math import gcd

from . import hj as hj_mod
from .errors import DomainError, ParseError
from .linalg import solve_exact
from .moduli import (
    IRREDUCIBLE_KIND,
    REDUCIBLE,
    enumerate_components,
    chern_simons_coefficient,
    floer_table,
    interpolation_dimension,
)
from .notation import (
    format_bundle,
    format_manifold,
    parse_bundle,
    parse_manifold,
)
from .orbifold import brieskorn_fibration, picard_quotient
from .resolution import (
    build_lattice,
    chern_coordinates,
    chern_evaluations,
    expected_dimension,
    expected_dimension_series,
)


def fmt(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _verify_datum(y, e, out=None) -> None:
    """Closed-form-versus-solver and series-form diagnostics for one datum."""
    out = out if out is not None else sys.stderr
    lat = build_lattice(y)
    closed = chern_coordinates(lat, e).flat()
    solved = solve_exact(
        [list(row) for row in lat.matrix], chern_evaluations(lat, e).flat()
    )
    if closed == solved:
        print(f"verify {format_bundle(e)}: closed form matches exact solve", file=out)
    else:
        print(f"verify {format_bundle(e)}: CLOSED-FORM MISMATCH", file=out)
    series, agrees = expected_dimension_series(y, e)
    state = "matches" if agrees else "differs from"
    print(
        f"verify {format_bundle(e)}: series form {fmt(series)} {state} "
        f"lattice dimension",
        file=out,
    )


def _table_lines(y, table) -> list[str]:
    lines = [f"manifold {format_manifold(y)}", "grading rank"]
    for grading, rank in table.ranks:
        lines.append(f"{grading} {rank}")
    return lines


def _table_json(y, table) -> dict:
    components = []
    for comp in enumerate_components(y):
        if comp.kind != IRREDUCIBLE_KIND:
            continue
        components.append(
            {
                "data": [comp.data.background, *comp.data.local_invariants],
                "sign": comp.sign,
                "dim": comp.complex_dim,
                "grading": int(comp.grading)
                if comp.grading.denominator == 1
                else fmt(comp.grading),
                "cs": fmt(comp.cs_coefficient),
            }
        )
    return {
        "manifold": format_manifold(y),
        "components": components,
        "hf": {str(g): r for g, r in table.ranks},
    }


def cmd_hf(args) -> int:
    y = parse_manifold(args.manifold)
    table = floer_table(y)
    if args.verify:
        for eps, sign, _ in table.generators:
            if sign != "+":
                continue
            _verify_datum(y, parse_bundle(f"(0;{','.join(map(str, eps))})", y.base))
    if args.json:
        print(json.dumps(_table_json(y, table)))
    elif args.csv:
        print("grading,rank")
        for grading, rank in table.ranks:
            print(f"{grading},{rank}")
    else:
        print("\n".join(_table_lines(y, table)))
    return 0


_AFFINE = re.compile(r"^(\d*)k([+-]\d+)?$")


def _parse_family(pattern: str):
    """Split '2,3,6k-1' into fixed multiplicities and one affine slot."""
    fixed = []
    affine = None
    for idx, raw in enumerate(pattern.split(",")):
        part = raw.strip()
        match = _AFFINE.match(part)
        if match:
            if affine is not None:
                raise ParseError("more than one affine slot in the family", 1)
            coeff = int(match.group(1)) if match.group(1) else 1
            offset = int(match.group(2)) if match.group(2) else 0
            affine = (idx, coeff, offset)
        else:
            try:
                fixed.append((idx, int(part)))
            except ValueError:
                raise ParseError(f"bad multiplicity '{part}'", 1) from None
    if affine is None:
        raise ParseError("family needs one affine slot like '6k-1'", 1)
    return fixed, affine


def _parse_krange(text: str) -> range:
    match = re.match(r"^(-?\d+)\.\.(-?\d+)$", text)
    if not match:
        raise ParseError("expected a range like 1..8", 1)
    lo, hi = int(match.group(1)), int(match.group(2))
    return range(lo, hi + 1)


def cmd_family(args) -> int:
    fixed, (slot, coeff, offset) = _parse_family(args.pattern)
    for k in _parse_krange(args.k):
        values = dict(fixed)
        values[slot] = coeff * k + offset
        alphas = [values[i] for i in sorted(values)]
        label = "Sigma(" + ",".join(str(a) for a in alphas) + ")"
        bad = any(a < 2 for a in alphas) or any(
            gcd(alphas[i], alphas[j]) != 1
            for i in range(len(alphas))
            for j in range(i + 1, len(alphas))
        )
        if bad:
            print(f"k={k} {label} skipped: multiplicities not pairwise coprime")
            continue
        y = brieskorn_fibration(alphas)
        table = floer_table(y)
        if args.verify:
            for eps, sign, _ in table.generators:
                if sign != "+":
                    continue
                _verify_datum(
                    y, parse_bundle(f"(0;{','.join(map(str, eps))})", y.base)
                )
        print(f"k={k} {label}")
        for grading, rank in table.ranks:
            print(f"  {grading} {rank}")
        if not table.ranks:
            print("  (empty)")
    return 0


def cmd_dim(args) -> int:
    y = parse_manifold(args.manifold)
    e = parse_bundle(args.bundle, y.base)
    value = expected_dimension(y, e)
    if args.verify:
        _verify_datum(y, e)
    print(fmt(value))
    return 0


def cmd_flowdim(args) -> int:
    y = parse_manifold(args.manifold)
    e1 = parse_bundle(args.source, y.base)
    if args.to_reducible:
        value = interpolation_dimension(y, e1, REDUCIBLE)
    else:
        if args.target is None:
            raise ParseError("flowdim needs a target bundle or --to-reducible", 1)
        e2 = parse_bundle(args.target, y.base)
        value = interpolation_dimension(y, e1, e2)
    if args.verify:
        _verify_datum(y, e1)
    print(fmt(value))
    return 0


def cmd_enumerate(args) -> int:
    y = parse_manifold(args.manifold)
    spinc = parse_bundle(args.spinc, y.base) if args.spinc else None
    print("kind sign data degree dim grading cs")
    for comp in enumerate_components(y, spinc):
        sign = comp.sign or "."
        grading = fmt(comp.grading) if comp.grading is not None else "."
        print(
            f"{comp.kind} {sign} {format_bundle(comp.data)} "
            f"{fmt(comp.data.degree())} {comp.complex_dim} {grading} "
            f"{fmt(comp.cs_coefficient)}"
        )
    return 0


def cmd_cs(args) -> int:
    y = parse_manifold(args.manifold)
    e = parse_bundle(args.bundle, y.base)
    print(fmt(chern_simons_coefficient(y, e)))
    return 0


def cmd_hj(args) -> int:
    chain = hj_mod.expand(args.p, args.q)
    print(f"{args.p}/{args.q} = <{','.join(str(a) for a in chain.a)}>")
    print("d = " + ",".join(str(d) for d in chain.d))
    if args.oracle:
        hull = hj_mod.lattice_hull(args.p, args.q)
        print("hull: " + " ".join(f"({i},{j})" for i, j in hull))
        hull_d = [-v[0] for v in hull]
        state = "agrees with" if tuple(hull_d) == chain.d else "DISAGREES WITH"
        print(f"hull {state} the expansion denominators")
    if args.sheaf is not None:
        coeffs = hj_mod.pullback_chern_numbers(args.p, args.q, args.sheaf)
        print(f"sheaf {args.sheaf}: " + ",".join(str(c) for c in coeffs))
    return 0


def cmd_picard(args) -> int:
    y = parse_manifold(args.manifold)
    factors, order = picard_quotient(y)
    print("invariant factors: " + ",".join(str(f) for f in factors))
    print(f"order: {order}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifertsw",
        description=(
            "Exact critical-set, level, dimension and Floer-table "
            "computations for Seifert fibered spaces."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hf", help="irreducible Floer homology table")
    p.add_argument("manifold")
    fmt_group = p.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true")
    fmt_group.add_argument("--csv", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("family", help="table sweep over a one-parameter family")
    p.add_argument("pattern", help="e.g. \"2,3,6k-1\"")
    p.add_argument("--k", required=True, help="inclusive range LO..HI")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("dim", help="expected dimension of bundle data")
    p.add_argument("manifold")
    p.add_argument("bundle")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("flowdim", help="expected dimension of a flow space")
    p.add_argument("manifold")
    p.add_argument("source")
    p.add_argument("target", nargs="?")
    p.add_argument("--to-reducible", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_flowdim)

    p = sub.add_parser("enumerate", help="list critical components")
    p.add_argument("manifold")
    p.add_argument("--spinc", help="restrict to the class of this bundle")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cs", help="Chern-Simons coefficient of bundle data")
    p.add_argument("manifold")
    p.add_argument("bundle")
    p.set_defaults(func=cmd_cs)

    p = sub.add_parser("hj", help="continued-fraction chain data")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="recompute the chain from the lattice hull")
    p.add_argument("--sheaf", type=int, metavar="J",
                   help="Chern numbers of the pulled-back weight-J sheaf")
    p.set_defaults(func=cmd_hj)

    p = sub.add_parser("picard", help="bundle class group modulo the fibration")
    p.add_argument("manifold")
    p.set_defaults(func=cmd_picard)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
