import random
from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seifertsw.errors import BaseMismatch, NonCoprime, ZeroDegree
from seifertsw.orbifold import (
    BundleData,
    OrbifoldBase,
    ReducibleStatus,
    SeifertFibration,
    brieskorn_fibration,
    canonical_bundle,
    euler_characteristic,
    in_picard_image,
    orbi_spin_bundle,
    picard_quotient,
    reducible_nondegeneracy,
    same_spinc_class,
    sheaf_euler_characteristic,
    trivial_bundle,
)


def random_base(rng, max_points=4, max_alpha=12, max_genus=3):
    n = rng.randint(0, max_points)
    return OrbifoldBase(
        genus=rng.randint(0, max_genus),
        multiplicities=tuple(rng.randint(2, max_alpha) for _ in range(n)),
    )


def random_bundle(rng, base, background_range=(-5, 5)):
    return BundleData(
        base,
        rng.randint(*background_range),
        tuple(rng.randrange(a) for a in base.multiplicities),
    )


def random_fibration(rng, max_points=4, max_alpha=12, max_genus=3):
    while True:
        n = rng.randint(0, max_points)
        alphas = tuple(rng.randint(2, max_alpha) for _ in range(n))
        betas = tuple(
            rng.choice([b for b in range(1, a) if gcd(a, b) == 1])
            for a in alphas
        )
        base = OrbifoldBase(rng.randint(0, max_genus), alphas)
        bundle = BundleData(base, rng.randint(-4, 4), betas)
        if bundle.degree() != 0:
            return SeifertFibration(bundle)


class TestEulerCharacteristic:
    @pytest.mark.parametrize("g", range(5))
    def test_no_marked_points(self, g):
        assert euler_characteristic(OrbifoldBase(g)) == 2 - 2 * g

    def test_flat_three_three_three(self):
        base = OrbifoldBase(0, (3, 3, 3))
        assert euler_characteristic(base) == 0
        assert canonical_bundle(base).degree() == 0

    def test_two_three_five(self):
        assert euler_characteristic(OrbifoldBase(0, (2, 3, 5))) == Fraction(1, 30)


class TestDegreeAndCanonical:
    def test_trivial_bundle(self):
        base = OrbifoldBase(1, (2, 3))
        assert trivial_bundle(base).degree() == 0

    def test_canonical_of_237(self):
        base = OrbifoldBase(0, (2, 3, 7))
        k = canonical_bundle(base)
        assert k.background == -2
        assert k.local_invariants == (1, 2, 6)
        assert k.degree() == Fraction(1, 42)
        assert k.degree() == -euler_characteristic(base)

    def test_generator_degree_is_reciprocal_product(self):
        for alphas in [(2, 3, 7), (2, 5, 11), (3, 4, 5)]:
            y = brieskorn_fibration(alphas)
            generator = y.bundle.inverse()
            assert generator.degree() == Fraction(1, prod(alphas))

    @pytest.mark.parametrize("g", range(4))
    def test_smooth_canonical(self, g):
        assert canonical_bundle(OrbifoldBase(g)).background == 2 * g - 2

    def test_canonical_degree_is_minus_chi_randomized(self):
        rng = random.Random(3)
        for _ in range(100):
            base = random_base(rng)
            assert canonical_bundle(base).degree() == -euler_characteristic(base)


class TestTensorAlgebra:
    def test_inverse_cancels(self):
        base = OrbifoldBase(0, (2, 5, 11))
        e = BundleData(base, 3, (1, 4, 7))
        assert e.tensor(e.inverse()).is_trivial()

    def test_carry_into_background(self):
        base = OrbifoldBase(0, (2,))
        h = BundleData(base, 0, (1,))
        assert h.tensor(h) == BundleData(base, 1, (0,))

    def test_inverse_of_fibration_bundle(self):
        y = brieskorn_fibration((2, 5, 11))
        assert y.bundle == BundleData(y.base, -1, (1, 2, 1))
        inv = y.bundle.inverse()
        assert inv == BundleData(y.base, -2, (1, 3, 10))
        assert inv.degree() == Fraction(1, 110)

    def test_base_mismatch(self):
        a = trivial_bundle(OrbifoldBase(0, (2, 3)))
        b = trivial_bundle(OrbifoldBase(0, (2, 5)))
        with pytest.raises(BaseMismatch):
            a.tensor(b)

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_group_laws_and_degree_homomorphism(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        base = random_base(rng)
        e1, e2, e3 = (random_bundle(rng, base) for _ in range(3))
        assert e1.tensor(e2) == e2.tensor(e1)
        assert e1.tensor(e2).tensor(e3) == e1.tensor(e2.tensor(e3))
        assert e1.tensor(e2).degree() == e1.degree() + e2.degree()
        assert e1.tensor(e1.inverse()).is_trivial()
        k = rng.randint(-3, 3)
        expected = trivial_bundle(base)
        for _ in range(abs(k)):
            expected = expected.tensor(e1 if k > 0 else e1.inverse())
        assert e1.power(k) == expected

    def test_full_period_power_has_zero_locals(self):
        rng = random.Random(5)
        for _ in range(30):
            base = random_base(rng, max_points=3, max_alpha=6)
            e = random_bundle(rng, base)
            period = prod(base.multiplicities) if base.multiplicities else 1
            for k in (period, 2 * period):
                assert e.power(k).local_invariants == (0,) * base.marked_points

    def test_desingularized_chern_number_is_background(self):
        rng = random.Random(6)
        for _ in range(50):
            base = random_base(rng)
            e = random_bundle(rng, base)
            locals_part = sum(
                (Fraction(b, a) for b, a in zip(e.local_invariants, base.multiplicities)),
                Fraction(0),
            )
            assert e.degree() - locals_part == e.background


class TestPicardImage:
    def test_trivial(self):
        base = OrbifoldBase(0, (2, 3))
        assert in_picard_image(base, Fraction(0), (0, 0))

    def test_canonical_data(self):
        base = OrbifoldBase(0, (2, 3, 7))
        assert in_picard_image(base, Fraction(1, 42), (1, 2, 6))

    def test_half_over_three_five(self):
        base = OrbifoldBase(0, (3, 5))
        assert not in_picard_image(base, Fraction(1, 2), (0, 0))

    def test_every_constructed_bundle_is_in_image(self):
        rng = random.Random(9)
        for _ in range(100):
            base = random_base(rng)
            e = random_bundle(rng, base)
            assert in_picard_image(base, e.degree(), e.local_invariants)


class TestBrieskorn:
    @pytest.mark.parametrize(
        "alphas,background,betas,degree",
        [
            ((2, 3, 7), -1, (1, 1, 1), Fraction(-1, 42)),
            ((2, 5, 11), -1, (1, 2, 1), Fraction(-1, 110)),
            ((2, 3, 5), -2, (1, 2, 4), Fraction(-1, 30)),
        ],
    )
    def test_worked_examples(self, alphas, background, betas, degree):
        y = brieskorn_fibration(alphas)
        assert y.bundle.background == background
        assert y.bundle.local_invariants == betas
        assert y.degree() == degree

    def test_rejects_common_factor(self):
        with pytest.raises(NonCoprime):
            brieskorn_fibration((2, 4, 5))

    def test_degree_and_order_randomized(self):
        rng = random.Random(13)
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23]
        for _ in range(40):
            alphas = tuple(sorted(rng.sample(primes, rng.randint(1, 4))))
            y = brieskorn_fibration(alphas)
            assert y.degree() == Fraction(-1, prod(alphas))
            _, order = picard_quotient(y)
            assert order == 1
            assert all(
                gcd(a, b) == 1
                for a, b in zip(y.base.multiplicities, y.bundle.local_invariants)
            )


class TestPicardQuotient:
    @pytest.mark.parametrize("n", [1, -1, 2, -3, 7])
    @pytest.mark.parametrize("g", [0, 2])
    def test_smooth_circle_bundle(self, n, g):
        y = SeifertFibration(BundleData(OrbifoldBase(g), n, ()))
        factors, order = picard_quotient(y)
        assert order == abs(n)
        assert [f for f in factors if f != 1] == ([abs(n)] if abs(n) != 1 else [])

    def test_homology_spheres(self):
        assert picard_quotient(brieskorn_fibration((2, 3, 7)))[1] == 1
        base = OrbifoldBase(0, (2, 3))
        y = SeifertFibration(BundleData(base, -1, (1, 1)))
        assert y.degree() == Fraction(-1, 6)
        assert picard_quotient(y)[1] == 1

    def test_zero_degree(self):
        y = SeifertFibration(BundleData(OrbifoldBase(1), 0, ()))
        with pytest.raises(ZeroDegree):
            picard_quotient(y)

    def test_order_formula_randomized(self):
        rng = random.Random(17)
        for _ in range(60):
            y = random_fibration(rng)
            _, order = picard_quotient(y)
            assert order == abs(y.degree()) * prod(y.base.multiplicities)


class TestSameSpincClass:
    def test_reflexive(self):
        y = brieskorn_fibration((2, 5, 11))
        e = BundleData(y.base, 0, (0, 0, 1))
        assert same_spinc_class(e, e, y)

    def test_trivial_quotient_identifies_everything(self):
        y = brieskorn_fibration((2, 3, 7))
        rng = random.Random(21)
        for _ in range(20):
            e1 = random_bundle(rng, y.base)
            e2 = random_bundle(rng, y.base)
            assert same_spinc_class(e1, e2, y)

    def test_smooth_chern_two(self):
        y = SeifertFibration(BundleData(OrbifoldBase(0), 2, ()))
        e0 = BundleData(y.base, 0, ())
        e1 = BundleData(y.base, 1, ())
        assert not same_spinc_class(e0, e1, y)
        assert same_spinc_class(e0, BundleData(y.base, 4, ()), y)

    def test_twists_recognized_randomized(self):
        rng = random.Random(23)
        for _ in range(40):
            y = random_fibration(rng)
            e = random_bundle(rng, y.base)
            k = rng.randint(-4, 4)
            assert same_spinc_class(e, e.tensor(y.bundle.power(k)), y)


class TestOrbiSpin:
    def test_even_multiplicity_blocks_cyclic_case(self):
        assert orbi_spin_bundle(OrbifoldBase(0, (2, 3, 7))) is None

    def test_all_odd_cyclic_case(self):
        base = OrbifoldBase(0, (3, 5, 7))
        half = orbi_spin_bundle(base)
        assert half == BundleData(base, -1, (1, 2, 3))
        assert 2 * half.degree() == canonical_bundle(base).degree()

    def test_smooth_genus_one(self):
        base = OrbifoldBase(1)
        assert orbi_spin_bundle(base) == BundleData(base, 0, ())

    def test_non_cyclic_search_finds_trivial(self):
        base = OrbifoldBase(0, (3, 3, 3))
        half = orbi_spin_bundle(base)
        assert half is not None
        assert 2 * half.degree() == canonical_bundle(base).degree() == 0


class TestReducibleNondegeneracy:
    def test_brieskorn_237(self):
        status = reducible_nondegeneracy(brieskorn_fibration((2, 3, 7)))
        assert status is ReducibleStatus.NONDEGENERATE

    def test_all_odd_genus_zero(self):
        status = reducible_nondegeneracy(brieskorn_fibration((3, 5, 7)))
        assert status is ReducibleStatus.NONDEGENERATE

    def test_positive_genus_orbi_spin_is_degenerate(self):
        base = OrbifoldBase(1, (3, 5))
        y = SeifertFibration(BundleData(base, -1, (1, 1)))
        assert reducible_nondegeneracy(y) is ReducibleStatus.DEGENERATE

    def test_non_cyclic_is_indeterminate(self):
        base = OrbifoldBase(0, (3, 3, 3))
        y = SeifertFibration(BundleData(base, -2, (1, 1, 1)))
        assert y.degree() == -1
        assert reducible_nondegeneracy(y) is ReducibleStatus.INDETERMINATE

    def test_zero_degree(self):
        with pytest.raises(ZeroDegree):
            reducible_nondegeneracy(
                SeifertFibration(BundleData(OrbifoldBase(1), 0, ()))
            )


class TestSheafEuler:
    @pytest.mark.parametrize("g", range(4))
    def test_trivial(self, g):
        assert sheaf_euler_characteristic(trivial_bundle(OrbifoldBase(g))) == 1 - g

    def test_canonical_over_genus_two(self):
        assert sheaf_euler_characteristic(canonical_bundle(OrbifoldBase(2))) == 1

    def test_orbifold_example(self):
        e = BundleData(OrbifoldBase(0, (2, 3)), 5, (1, 2))
        assert sheaf_euler_characteristic(e) == 6
