"""Critical components of the Chern-Simons flow, their levels and gradings,
and irreducible Floer homology tables.

Irreducible components come in sign pairs and are labelled by bundle data
(e; eps_1, ..., eps_n) with e >= 0, 0 <= eps_i < alpha_i and degree strictly
below half the canonical degree; each is a copy of the e-fold symmetric
product of the base curve, so tables require e = 0 throughout (isolated
points). Reducible components carry one per torsion spin-c class and sit at
Chern-Simons level zero.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateReducible,
    FromReducible,
    NonIsolatedCritical,
    OppositeSign,
    WrongOrientation,
    ZeroDegree,
)
from .orbifold import (
    BundleData,
    ReducibleStatus,
    SeifertFibration,
    canonical_bundle,
    picard_quotient,
    reducible_nondegeneracy,
    same_spinc_class,
    trivial_bundle,
)
from .resolution import build_lattice, flow_dimension, lattice_dimension


class BoundaryDegreeWarning(UserWarning):
    """Bundle data met the half-canonical bound exactly; it is reported but
    never becomes a generator (the strict inequality is normative)."""


class _ReducibleMarker:
    def __repr__(self):
        return "REDUCIBLE"


REDUCIBLE = _ReducibleMarker()

REDUCIBLE_KIND = "reducible"
IRREDUCIBLE_KIND = "irreducible"


@dataclass(frozen=True)
class CriticalComponent:
    kind: str
    sign: str | None
    data: BundleData
    complex_dim: int
    grading: Fraction | None
    cs_coefficient: Fraction


@dataclass(frozen=True)
class FloerTable:
    manifold: SeifertFibration
    generators: tuple[tuple[tuple[int, ...], str, int], ...]
    ranks: tuple[tuple[int, int], ...]  # (grading, rank), sorted

    def rank_map(self) -> dict[int, int]:
        return dict(self.ranks)

    def is_empty(self) -> bool:
        return not self.generators


def chern_simons_coefficient(y: SeifertFibration, e: BundleData) -> Fraction:
    """Rational r with cs = 4 pi^2 r on the component labelled by e:
    (deg(e) - deg(K)/2)^2 / deg(y). Reducibles sit at level zero by the
    normalization and are handled where they are enumerated."""
    deg_y = y.degree()
    if deg_y == 0:
        raise ZeroDegree("levels are undefined at degree zero")
    half_k = canonical_bundle(y.base).degree() / 2
    offset = e.degree() - half_k
    return offset * offset / deg_y


def _tuples_with_budget(alphas, limit: Fraction):
    """Yield (eps_tuple, sum eps_i/alpha_i) with the sum <= limit, pruning
    branches whose partial sum already exceeds it."""
    n = len(alphas)
    eps = [0] * n

    def rec(i: int, acc: Fraction):
        if i == n:
            yield tuple(eps), acc
            return
        alpha = alphas[i]
        top = min(alpha - 1, math.floor((limit - acc) * alpha))
        for value in range(top + 1):
            eps[i] = value
            yield from rec(i + 1, acc + Fraction(value, alpha))
        eps[i] = 0

    if limit >= 0:
        yield from rec(0, Fraction(0))


def _spinc_representative(y: SeifertFibration, e: BundleData) -> BundleData:
    """Canonical representative of e's class: the twist with degree in
    [0, |deg(y)|)."""
    deg_y = y.degree()
    k = math.floor(e.degree() / abs(deg_y))
    twist = k if deg_y < 0 else -k
    return e.tensor(y.bundle.power(twist))


def _reducible_representatives(y: SeifertFibration) -> list[BundleData]:
    """One bundle per torsion spin-c class, degree normalized into
    [0, |deg(y)|)."""
    _, order = picard_quotient(y)
    if order == 1:
        return [trivial_bundle(y.base)]
    deg_abs = abs(y.degree())
    alphas = y.base.multiplicities
    reps = []
    for eps, s in _tuples_with_budget(alphas, Fraction(sum(alphas))):
        e = -math.floor(s)  # smallest background with degree >= 0
        while e + s < deg_abs:
            reps.append(BundleData(y.base, e, eps))
            e += 1
    if len(reps) != order:
        raise ArithmeticError(
            f"found {len(reps)} class representatives, expected {order}"
        )
    return reps


def enumerate_components(
    y: SeifertFibration, spinc: BundleData | None = None
) -> list[CriticalComponent]:
    """All critical components, optionally restricted to one spin-c class.

    Irreducible data ranges over e >= 0, 0 <= eps_i < alpha_i with
    0 <= degree < deg(K)/2 (strict; data meeting the bound exactly raises a
    BoundaryDegreeWarning and is excluded). Each datum contributes a sign
    pair with complex dimension e and grading equal to its expected
    dimension. Reducible components contribute genus-dimensional tori, one
    per admissible spin-c class, at level zero.
    """
    deg_y = y.degree()
    if deg_y == 0:
        raise ZeroDegree("component enumeration needs a non-zero degree")
    base = y.base
    genus = base.genus
    half_k = canonical_bundle(base).degree() / 2

    components: list[CriticalComponent] = []
    if spinc is None:
        reducible_data = _reducible_representatives(y)
    else:
        reducible_data = [_spinc_representative(y, spinc)]
    for data in reducible_data:
        components.append(
            CriticalComponent(
                kind=REDUCIBLE_KIND,
                sign=None,
                data=data,
                complex_dim=genus,
                grading=None,
                cs_coefficient=Fraction(0),
            )
        )

    if half_k > 0:
        lat = build_lattice(y)
        e_top = math.floor(half_k)
        for e in range(e_top + 1):
            budget = half_k - e
            for eps, s in _tuples_with_budget(base.multiplicities, budget):
                data = BundleData(base, e, eps)
                if s == budget:
                    warnings.warn(
                        f"data {data.background};{data.local_invariants} has "
                        "degree exactly half the canonical degree; not a "
                        "generator",
                        BoundaryDegreeWarning,
                        stacklevel=2,
                    )
                    continue
                if spinc is not None and not same_spinc_class(data, spinc, y):
                    continue
                grading = lattice_dimension(lat, data)
                cs = chern_simons_coefficient(y, data)
                for sign in ("+", "-"):
                    components.append(
                        CriticalComponent(
                            kind=IRREDUCIBLE_KIND,
                            sign=sign,
                            data=data,
                            complex_dim=e,
                            grading=grading,
                            cs_coefficient=cs,
                        )
                    )

    def sort_key(c: CriticalComponent):
        return (
            c.kind != REDUCIBLE_KIND,
            c.grading if c.grading is not None else Fraction(0),
            (c.data.background,) + c.data.local_invariants,
            c.sign or "",
        )

    components.sort(key=sort_key)
    return components


def half_canonical_floor(y: SeifertFibration, e0: BundleData) -> BundleData:
    """The unique twist of e0 by the fibration bundle whose degree is
    maximal among those strictly below half the canonical degree. Computed
    by one exact floor, no search."""
    deg_y = y.degree()
    if deg_y == 0:
        raise ZeroDegree("half-canonical floor needs a non-zero degree")
    if deg_y > 0:
        raise WrongOrientation(
            "half-canonical floor uses the negative-degree orientation; "
            "invert the fibration"
        )
    half_k = canonical_bundle(y.base).degree() / 2
    # degree(e0) + k deg_y < half_k with deg_y < 0: smallest such k
    k = math.floor((half_k - e0.degree()) / deg_y) + 1
    result = e0.tensor(y.bundle.power(k))
    if not result.degree() < half_k <= result.degree() - deg_y:
        raise ArithmeticError("twist count failed the maximality check")
    return result


def interpolation_dimension(
    y: SeifertFibration,
    source,
    target,
    source_sign: str = "+",
    target_sign: str = "+",
) -> Fraction:
    """Expected dimension of the flow moduli from `source` to `target`.

    Both ends are bundle data for irreducible components, or the target may
    be the REDUCIBLE marker, in which case the flow runs to the reducible
    locus and the dimension is the interpolating-divisor dimension down to
    the half-canonical floor, plus one. Flows between opposite signs and
    flows out of the reducible locus do not exist and are rejected.
    """
    if source is REDUCIBLE:
        raise FromReducible("no flows leave the reducible locus")
    deg_y = y.degree()
    if deg_y == 0:
        raise ZeroDegree("flow dimensions need a non-zero degree")
    if target is REDUCIBLE:
        if deg_y > 0:
            raise WrongOrientation(
                "flows to the reducible locus use the negative-degree "
                "orientation; invert the fibration"
            )
        floor_bundle = half_canonical_floor(y, source)
        return flow_dimension(y, source, floor_bundle) + 1
    if source_sign != target_sign:
        raise OppositeSign(
            "no flows connect components of opposite sign"
        )
    return flow_dimension(y, source, target)


def floer_table(y: SeifertFibration) -> FloerTable:
    """Irreducible Floer homology of an isolated-critical-point fibration.

    All relative gradings are even, so the boundary map vanishes and the
    homology equals the chain group: two generators per admissible datum,
    graded by expected dimension, normalized so the nowhere-vanishing
    solutions sit in degree zero.
    """
    deg_y = y.degree()
    if deg_y == 0:
        raise ZeroDegree("Floer tables need a non-zero degree")
    if deg_y > 0:
        raise WrongOrientation(
            "fibration has positive degree; invert it and retry"
        )
    if reducible_nondegeneracy(y) is ReducibleStatus.DEGENERATE:
        raise DegenerateReducible(
            "reducible locus is degenerate; the table is not defined"
        )
    components = enumerate_components(y)
    irreducibles = [c for c in components if c.kind == IRREDUCIBLE_KIND]
    fat = [c for c in irreducibles if c.complex_dim > 0]
    if fat:
        raise NonIsolatedCritical(
            f"{len(fat)} critical components are positive-dimensional",
            components,
        )

    generators = []
    for c in irreducibles:
        grading = c.grading
        if grading.denominator != 1 or grading < 0 or int(grading) % 2 != 0:
            raise ArithmeticError(
                f"grading {grading} of {c.data} is not an even non-negative "
                "integer"
            )
        generators.append((c.data.local_invariants, c.sign, int(grading)))
    generators.sort(key=lambda g: (g[2], g[0], g[1]))

    ranks: dict[int, int] = {}
    for _, _, grading in generators:
        ranks[grading] = ranks.get(grading, 0) + 1
    if generators:
        zero_tuple = (0,) * y.base.marked_points
        if min(ranks) != 0 or (zero_tuple, "+", 0) not in generators:
            raise ArithmeticError(
                "grading normalization failed: the plain-spinor generator "
                "is not in degree zero"
            )
    return FloerTable(
        manifold=y,
        generators=tuple(generators),
        ranks=tuple(sorted(ranks.items())),
    )
