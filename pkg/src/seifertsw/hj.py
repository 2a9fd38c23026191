"""Hirzebruch-Jung continued fractions and cyclic quotient resolution data.

A coprime pair 0 < q < p expands as p/q = a_1 - 1/(a_2 - 1/(... - 1/a_m))
with all a_i >= 2. The tails' numerators d_0 = p, d_1 = q, ..., d_m = 1,
d_{m+1} = 0 drive everything else: greedy decompositions of local invariants
against (d_1, ..., d_m) give the Chern numbers of pulled-back sheaves on the
resolved quotient singularity, and the same vectors appear as the boundary
lattice points of an invariant-monoid hull, which `lattice_hull` recomputes
from scratch as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidPair, JOutOfRange


@dataclass(frozen=True)
class HJChain:
    """Continued-fraction expansion of p/q with its denominator sequence."""

    p: int
    q: int
    a: tuple[int, ...]
    d: tuple[int, ...]  # d_0 .. d_{m+1}, starts at p, ends 1, 0

    @property
    def length(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class Decomposition:
    coefficients: tuple[int, ...]


def _check_pair(p: int, q: int) -> None:
    if not (0 < q < p):
        raise InvalidPair(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise InvalidPair(f"p={p} and q={q} share the factor {gcd(p, q)}")


def expand(p: int, q: int) -> HJChain:
    """Expand p/q as an all-entries->=2 continued fraction.

    The denominator recurrence is d_{k+1} = ceil(d_{k-1}/d_k) * d_k - d_{k-1}
    (negated remainder); the floor variant can go negative and would break
    the a_i >= 2 guarantee.
    """
    _check_pair(p, q)
    d = [p, q]
    a = []
    while d[-1] != 1:
        ak = -(-d[-2] // d[-1])
        a.append(ak)
        d.append(ak * d[-1] - d[-2])
    a.append(d[-2])  # a_m d_m = d_{m-1} + d_{m+1} with d_m = 1, d_{m+1} = 0
    d.append(0)
    return HJChain(p=p, q=q, a=tuple(a), d=tuple(d))


def evaluate(a: tuple[int, ...]) -> Fraction:
    """Evaluate <a_1, ..., a_m> bottom-up as an exact rational."""
    value = Fraction(a[-1])
    for ak in reversed(a[:-1]):
        value = ak - 1 / value
    return value


def decompose(j: int, denominators) -> Decomposition:
    """Greedy decomposition of j >= 0 against a strictly decreasing list
    ending in 1: x_k = floor(remainder / d_k).

    This is simultaneously the lexicographically maximal non-negative
    solution of sum x_k d_k = j (largest coefficients first) and the one the
    resolved-sheaf Chern data wants.
    """
    if j < 0:
        raise ValueError(f"cannot decompose a negative value: {j}")
    ds = list(denominators)
    if any(x <= y for x, y in zip(ds, ds[1:])) or (ds and ds[-1] != 1):
        raise ValueError(f"denominators must strictly decrease to 1: {ds}")
    coeffs = []
    rem = j
    for dk in ds:
        coeffs.append(rem // dk)
        rem -= coeffs[-1] * dk
    if rem != 0:
        raise ValueError(f"decomposition of {j} left remainder {rem}")
    return Decomposition(coefficients=tuple(coeffs))


def lattice_hull(p: int, q: int) -> list[tuple[int, int]]:
    """Boundary lattice points of the invariant monoid, by brute force.

    Enumerates L = {(i, j) : i + q j = 0 mod p} inside [-p, 0] x [0, p] and
    walks the convex-hull chain from (-p, 0) to (0, p) on the origin side,
    keeping every lattice point on the chain (collinear points included).
    Entirely independent of `expand`; the two must agree on -i coordinates
    (the denominators) and on the relations v_{i-1} + v_{i+1} = a_i v_i.
    """
    _check_pair(p, q)
    points = [
        (i, j)
        for i in range(-p, 1)
        for j in range(0, p + 1)
        if (i + q * j) % p == 0 and (i, j) != (0, 0)
    ]
    chain = [(-p, 0)]
    while chain[-1] != (0, p):
        cx, cy = chain[-1]
        best = None
        for w in points:
            # chain coordinates strictly increase in both projections
            if w[0] <= cx or w[1] <= cy:
                continue
            if best is None:
                best = w
                continue
            cross = (best[0] - cx) * (w[1] - cy) - (best[1] - cy) * (w[0] - cx)
            if cross < 0:
                best = w
            elif cross == 0 and w[0] < best[0]:
                best = w  # nearer collinear point first, so none are skipped
        if best is None:
            raise InvalidPair(f"hull walk failed for p={p}, q={q}")
        chain.append(best)

    # self-check the three-term relation v_{i-1} + v_{i+1} = a_i v_i, a_i >= 2
    for i in range(1, len(chain) - 1):
        vp, vc, vn = chain[i - 1], chain[i], chain[i + 1]
        sx, sy = vp[0] + vn[0], vp[1] + vn[1]
        if vc[0] == 0 or sx % vc[0] != 0:
            raise InvalidPair(f"hull relation fails at vertex {i} for ({p},{q})")
        mult = sx // vc[0]
        if mult < 2 or sy != mult * vc[1]:
            raise InvalidPair(f"hull relation fails at vertex {i} for ({p},{q})")
    return chain


def pullback_chern_numbers(p: int, q: int, j: int) -> list[int]:
    """Chern pairings of the pulled-back weight-j sheaf with the exceptional
    spheres of the resolved quotient: the greedy coefficients of j against
    (d_1, ..., d_m)."""
    _check_pair(p, q)
    if not (0 <= j < p):
        raise JOutOfRange(f"need 0 <= j < p, got j={j}")
    chain = expand(p, q)
    return list(decompose(j, chain.d[1:-1]).coefficients)
