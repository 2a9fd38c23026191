"""Orbifold bases, orbifold line bundles, and Seifert fibrations.

A bundle is stored in normal form: background Chern number b plus local
invariants 0 <= beta_i < alpha_i, one per marked point. Tensor products
carry local overflow into the background so that the normal form is the
unique representative of an isomorphism class. Degrees are exact rationals
throughout.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import BaseMismatch, NonCoprime, ZeroDegree
from .linalg import smith_normal_form


@dataclass(frozen=True)
class OrbifoldBase:
    """Genus plus ordered marked-point multiplicities (each >= 2)."""

    genus: int
    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        object.__setattr__(self, "multiplicities", tuple(self.multiplicities))
        for alpha in self.multiplicities:
            if alpha < 2:
                raise ValueError(f"marked-point multiplicity {alpha} < 2")

    @property
    def marked_points(self) -> int:
        return len(self.multiplicities)

    @property
    def simply_connected(self) -> bool:
        """Genus zero with pairwise coprime multiplicities."""
        return self.genus == 0 and self.has_cyclic_picard

    @property
    def has_cyclic_picard(self) -> bool:
        alphas = self.multiplicities
        return all(
            gcd(alphas[i], alphas[j]) == 1
            for i in range(len(alphas))
            for j in range(i + 1, len(alphas))
        )


@dataclass(frozen=True)
class BundleData:
    """Normal-form data of an orbifold line bundle over a fixed base."""

    base: OrbifoldBase
    background: int
    local_invariants: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "local_invariants", tuple(self.local_invariants)
        )
        alphas = self.base.multiplicities
        if len(self.local_invariants) != len(alphas):
            raise ValueError(
                f"{len(self.local_invariants)} local invariants for "
                f"{len(alphas)} marked points"
            )
        for beta, alpha in zip(self.local_invariants, alphas):
            if not 0 <= beta < alpha:
                raise ValueError(f"local invariant {beta} not in [0, {alpha})")

    def degree(self) -> Fraction:
        return Fraction(self.background) + sum(
            (
                Fraction(beta, alpha)
                for beta, alpha in zip(
                    self.local_invariants, self.base.multiplicities
                )
            ),
            Fraction(0),
        )

    def is_trivial(self) -> bool:
        return self.background == 0 and not any(self.local_invariants)

    def tensor(self, other: "BundleData") -> "BundleData":
        """Componentwise sum with carry of local overflow into background."""
        if self.base != other.base:
            raise BaseMismatch("tensor product needs a common base")
        carry = 0
        locs = []
        for a, b, alpha in zip(
            self.local_invariants,
            other.local_invariants,
            self.base.multiplicities,
        ):
            total = a + b
            carry += total // alpha
            locs.append(total % alpha)
        return BundleData(
            base=self.base,
            background=self.background + other.background + carry,
            local_invariants=tuple(locs),
        )

    def inverse(self) -> "BundleData":
        carry = 0
        locs = []
        for beta, alpha in zip(self.local_invariants, self.base.multiplicities):
            if beta == 0:
                locs.append(0)
            else:
                locs.append(alpha - beta)
                carry += 1
        return BundleData(
            base=self.base,
            background=-self.background - carry,
            local_invariants=tuple(locs),
        )

    def power(self, k: int) -> "BundleData":
        """k-fold tensor power, k any integer; done by direct reduction."""
        factor = self if k >= 0 else self.inverse()
        k = abs(k)
        carry = 0
        locs = []
        for beta, alpha in zip(
            factor.local_invariants, factor.base.multiplicities
        ):
            total = k * beta
            carry += total // alpha
            locs.append(total % alpha)
        return BundleData(
            base=self.base,
            background=k * factor.background + carry,
            local_invariants=tuple(locs),
        )


def trivial_bundle(base: OrbifoldBase) -> BundleData:
    return BundleData(base, 0, (0,) * base.marked_points)


@dataclass(frozen=True)
class SeifertFibration:
    """Unit circle bundle of an orbifold line bundle with coprime local data.

    Degree may be zero at the type level; every moduli-level operation
    rejects that case explicitly.
    """

    bundle: BundleData

    def __post_init__(self):
        for beta, alpha in zip(
            self.bundle.local_invariants, self.base.multiplicities
        ):
            if gcd(alpha, beta) != 1:
                raise ValueError(
                    f"local invariant {beta} shares a factor with {alpha}; "
                    "total space would not be smooth"
                )

    @property
    def base(self) -> OrbifoldBase:
        return self.bundle.base

    def degree(self) -> Fraction:
        return self.bundle.degree()

    def inverse(self) -> "SeifertFibration":
        return SeifertFibration(self.bundle.inverse())


def euler_characteristic(base: OrbifoldBase) -> Fraction:
    """2 - 2g + sum(1/alpha_i - 1), counting marked points fractionally."""
    chi = Fraction(2 - 2 * base.genus)
    for alpha in base.multiplicities:
        chi += Fraction(1, alpha) - 1
    return chi


def canonical_bundle(base: OrbifoldBase) -> BundleData:
    """(2g - 2; alpha_1 - 1, ..., alpha_n - 1); its degree is -chi."""
    return BundleData(
        base=base,
        background=2 * base.genus - 2,
        local_invariants=tuple(a - 1 for a in base.multiplicities),
    )


def in_picard_image(base: OrbifoldBase, degree: Fraction, local_invariants) -> bool:
    """Whether (degree, locals) can come from an actual bundle: the degree
    minus the local contributions must be an integer."""
    alphas = base.multiplicities
    locs = tuple(local_invariants)
    if len(locs) != len(alphas):
        raise ValueError("local invariant count does not match the base")
    for beta, alpha in zip(locs, alphas):
        if not 0 <= beta < alpha:
            raise ValueError(f"local invariant {beta} not in [0, {alpha})")
    rest = Fraction(degree) - sum(
        (Fraction(b, a) for b, a in zip(locs, alphas)), Fraction(0)
    )
    return rest.denominator == 1


def brieskorn_fibration(alphas) -> SeifertFibration:
    """The homology-sphere Seifert fibration over genus-zero base with the
    given pairwise-coprime multiplicities, oriented so the defining bundle
    has degree -1/(alpha_1 ... alpha_n)."""
    alphas = tuple(alphas)
    if not alphas:
        raise NonCoprime("need at least one multiplicity")
    for a in alphas:
        if a < 2:
            raise NonCoprime(f"multiplicity {a} < 2")
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if gcd(alphas[i], alphas[j]) != 1:
                raise NonCoprime(
                    f"{alphas[i]} and {alphas[j]} share a common factor"
                )
    total = prod(alphas)
    # beta_i is minus the inverse of (total/alpha_i) mod alpha_i; then the
    # degree equation b * total + sum beta_i * total/alpha_i = -1 fixes b.
    betas = tuple(
        (-pow(total // a, -1, a)) % a if a > 1 else 0 for a in alphas
    )
    numerator = -1 - sum(b * (total // a) for b, a in zip(betas, alphas))
    background, rem = divmod(numerator, total)
    if rem:
        raise ArithmeticError("degree equation failed to close")
    base = OrbifoldBase(genus=0, multiplicities=alphas)
    return SeifertFibration(BundleData(base, background, betas))


def picard_quotient(y: SeifertFibration) -> tuple[tuple[int, ...], int]:
    """Invariant factors and order of the bundle class group modulo the
    fibration class.

    Presents the group on generators (c, h_1, ..., h_n) with relations
    alpha_i h_i = c and the fibration relation b c + sum beta_i h_i = 0,
    then reads off the Smith normal form. The order always equals
    |deg| * prod(alpha_i).
    """
    deg = y.degree()
    if deg == 0:
        raise ZeroDegree("class group is infinite for a degree-zero fibration")
    alphas = y.base.multiplicities
    n = len(alphas)
    relations = []
    for i, alpha in enumerate(alphas):
        row = [0] * (n + 1)
        row[0] = -1
        row[i + 1] = alpha
        relations.append(row)
    fibr = [y.bundle.background] + list(y.bundle.local_invariants)
    relations.append(fibr)
    diag, _, _ = smith_normal_form(relations)
    order = prod(diag)
    expected = abs(deg) * prod(alphas)
    if order != expected:
        raise ArithmeticError(
            f"class group order {order} != |deg| * prod(alpha) = {expected}"
        )
    return tuple(diag), order


def same_spinc_class(
    e1: BundleData, e2: BundleData, y: SeifertFibration
) -> bool:
    """Whether e1 and e2 differ by an integer twist of the fibration bundle.

    The twist count is forced by degrees: deg(e1) - deg(e2) = k * deg(N)
    pins k exactly, after which a single normal-form comparison decides.
    """
    if e1.base != e2.base or e1.base != y.base:
        raise BaseMismatch("spin-c comparison needs a common base")
    deg_n = y.degree()
    if deg_n == 0:
        raise ZeroDegree("spin-c classes are not discrete at degree zero")
    ratio = (e1.degree() - e2.degree()) / deg_n
    if ratio.denominator != 1:
        return False
    return e2.tensor(y.bundle.power(int(ratio))) == e1


def orbi_spin_bundle(base: OrbifoldBase) -> BundleData | None:
    """A bundle with twice the degree of the canonical one, if any exists.

    Cyclic class group (pairwise coprime multiplicities): exists exactly
    when every multiplicity is odd, and then the data is
    (g - 1, (alpha_i - 1)/2). Otherwise the finitely many local-invariant
    combinations are searched outright, so the answer is always definite.
    """
    alphas = base.multiplicities
    half_k = Fraction(canonical_bundle(base).degree(), 2)
    if base.has_cyclic_picard:
        if any(a % 2 == 0 for a in alphas):
            return None
        candidate = BundleData(
            base, base.genus - 1, tuple((a - 1) // 2 for a in alphas)
        )
        if 2 * candidate.degree() != 2 * half_k:
            raise ArithmeticError("half-canonical data fails its degree check")
        return candidate
    for locs in itertools.product(*(range(a) for a in alphas)):
        rest = half_k - sum(
            (Fraction(b, a) for b, a in zip(locs, alphas)), Fraction(0)
        )
        if rest.denominator == 1:
            return BundleData(base, int(rest), locs)
    return None


class ReducibleStatus(enum.Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    INDETERMINATE = "indeterminate"


def reducible_nondegeneracy(y: SeifertFibration) -> ReducibleStatus:
    """Non-degeneracy of the reducible locus, reported for the spin-c class
    pulled back from a half-canonical bundle when one exists.

    The clean criterion needs a cyclic class group: degenerate exactly when
    a half-canonical bundle exists and the genus is positive. Outside the
    cyclic case no complete criterion is available, so the answer is an
    explicit INDETERMINATE rather than a guess.
    """
    if y.degree() == 0:
        raise ZeroDegree("non-degeneracy is only defined at non-zero degree")
    base = y.base
    if not base.has_cyclic_picard:
        return ReducibleStatus.INDETERMINATE
    if orbi_spin_bundle(base) is not None and base.genus > 0:
        return ReducibleStatus.DEGENERATE
    return ReducibleStatus.NONDEGENERATE


def sheaf_euler_characteristic(e: BundleData) -> int:
    """Euler characteristic of the sheaf of sections: 1 - g + b."""
    return 1 - e.base.genus + e.background
