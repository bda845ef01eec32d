import random
from fractions import Fraction

import pytest

from conftest import random_data
from txyrigid.algebra import FactoredFraction, LaurentZ, PolyXY, fraction_is_constant
from txyrigid.classify import make_l1, make_s3, make_z
from txyrigid.genera import (
    FixedPoint,
    FixedPointData,
    ah_constant,
    is_rigid,
    limit_symmetry,
    point_term,
    rigidity_defect,
    rigidity_sum,
    specialize,
    substitute_x_pow,
    weight_gcd,
)

X = PolyXY.x()
Y = PolyXY.y()
ONE = PolyXY.one()


def fraction_value(data: FixedPointData, z0: Fraction, x0: Fraction, y0: Fraction) -> Fraction:
    """Independent oracle: evaluate the fixed-point sum numerically,
    factor by factor, with exact rationals."""
    total = Fraction(0)
    for p in data.points:
        term = Fraction(p.sign)
        for w in p.weights:
            term *= (x0 * z0**w + y0) / (z0**w - 1)
        total += term
    return total


def evaluate(fraction: FactoredFraction, z0, x0, y0) -> Fraction:
    num = fraction.numerator.eval_z(z0).substitute(x0, y0)
    den = Fraction(1)
    for a in fraction.denominator:
        den *= Fraction(z0) ** a - 1
    return num / den


# -- point_term --------------------------------------------------------------


def test_point_term_single_positive_weight():
    f = point_term(FixedPoint((4,), 1))
    assert f.numerator == LaurentZ({4: X, 0: Y})
    assert f.denominator == (4,)


def test_point_term_single_negative_weight():
    f = point_term(FixedPoint((-4,), 1))
    assert f.numerator == LaurentZ({0: -X, 4: -Y})
    assert f.denominator == (4,)


def test_point_term_mixed_weights_negative_sign():
    # (1, -1; -1): the two sign flips cancel, leaving (xz + y)(x + yz)/(z-1)^2
    f = point_term(FixedPoint((1, -1), -1))
    expected = LaurentZ({1: X, 0: Y}) * LaurentZ({0: X, 1: Y})
    assert f.numerator == expected
    assert f.denominator == (1, 1)
    # numeric oracle at z=2, x=3, y=5
    data = FixedPointData(2, (FixedPoint((1, -1), -1),))
    assert evaluate(f, 2, 3, 5) == fraction_value(data, Fraction(2), Fraction(3), Fraction(5))


def test_point_term_matches_numeric_oracle_randomized():
    rng = random.Random(11)
    for _ in range(25):
        data = random_data(rng, m=1, max_abs=4, n_max=3)
        f = point_term(data.points[0])
        for z0 in (Fraction(2), Fraction(3, 2), Fraction(-2)):
            assert evaluate(f, z0, Fraction(3), Fraction(5)) == fraction_value(
                data, z0, Fraction(3), Fraction(5)
            )


# -- rigidity_sum ------------------------------------------------------------


def test_rigidity_sum_l1_is_constant_fraction():
    for a in (1, 3, 7):
        total = rigidity_sum(make_l1(a))
        assert total.denominator == (a,)
        assert total.numerator == LaurentZ.from_poly(X - Y) * LaurentZ({a: ONE, 0: -ONE})
        assert total.is_constant() == X - Y


def test_rigidity_sum_z_family_vanishes():
    total = rigidity_sum(make_z((1, -2, 3)))
    assert total.numerator.is_zero()


def test_rigidity_sum_single_point_not_constant():
    total = rigidity_sum(FixedPointData(1, (FixedPoint((1,), 1),)))
    assert total.is_constant() is None


# -- ah_constant -------------------------------------------------------------


def test_ah_constant_families():
    assert ah_constant(make_l1(5)) == X - Y
    assert ah_constant(make_s3(1, 1)) == X * Y * Y - X * X * Y
    assert ah_constant(make_z((2, -7))) == PolyXY.zero()


def test_ah_constant_counts():
    data = FixedPointData(3, (FixedPoint((1, -2, -3), -1),))
    # one point with s+ = 1, s- = 2: -x(-y)^2 = -x y^2
    assert ah_constant(data) == -X * Y * Y


# -- rigidity_defect / is_rigid ----------------------------------------------


def test_defect_zero_for_families():
    assert rigidity_defect(make_s3(1, 1)).is_zero()
    assert rigidity_defect(make_z((1, 1))).is_zero()


def test_defect_nonzero_with_numeric_oracle():
    data = FixedPointData(2, (FixedPoint((1, 2), 1), FixedPoint((-1, -2), 1)))
    defect = rigidity_defect(data)
    assert not defect.is_zero()
    # evaluate the fixed-point sum at z=2 with x, y formal and compare
    total = rigidity_sum(data)
    den = Fraction(1)
    for a in total.denominator:
        den *= Fraction(2) ** a - 1
    lhs_value = total.numerator.eval_z(2) * (Fraction(1) / den)
    assert lhs_value != ah_constant(data)


def test_is_rigid_examples():
    report = is_rigid(make_l1(3))
    assert report.rigid and report.constant == X - Y
    report = is_rigid(make_s3(2, 5))
    assert report.rigid and report.constant == X * Y * Y - X * X * Y
    report = is_rigid(FixedPointData(2, (FixedPoint((1, 2), 1), FixedPoint((-1, -2), 1))))
    assert not report.rigid and report.constant is None


def test_report_consistency():
    rng = random.Random(12)
    for _ in range(40):
        report = is_rigid(random_data(rng, max_abs=4))
        assert report.rigid == report.defect.is_zero()
        assert (report.constant is not None) == report.rigid
        if report.rigid:
            assert report.constant == report.ah_constant


def test_one_fixed_point_is_never_rigid():
    # limit symmetry alone only fails when s+ != s-; balanced single points
    # (possible for even n) are still never rigid via the exact check
    rng = random.Random(19)
    for _ in range(30):
        data = random_data(rng, m=1, max_abs=5)
        assert not is_rigid(data).rigid
        point = data.points[0]
        if point.s_plus != point.s_minus:
            assert not limit_symmetry(data)


# -- limit_symmetry ----------------------------------------------------------


def test_limit_symmetry_families():
    assert limit_symmetry(make_l1(2))
    assert limit_symmetry(make_s3(1, 2))
    assert limit_symmetry(make_z((4, -1)))


def test_limit_symmetry_single_point_fails():
    assert not limit_symmetry(FixedPointData(1, (FixedPoint((1,), 1),)))


def test_limit_symmetry_equivalent_formulation():
    # symmetric limits are the same as ah(x, y) == (-1)^n ah(y, x)
    rng = random.Random(13)
    for _ in range(60):
        data = random_data(rng, max_abs=4)
        ah = ah_constant(data)
        swapped = ah.swap_xy() * Fraction((-1) ** data.n)
        assert limit_symmetry(data) == (ah == swapped)


# -- specialize / substitute_x_pow -------------------------------------------


def test_specialize_l1_at_ones():
    total = specialize(rigidity_sum(make_l1(1)), 1, 1)
    assert total.numerator.is_zero()


def test_specialize_s3_balance_at_y_zero():
    # equal weight-group sums make the y=0 numerator collapse entirely
    total = specialize(rigidity_sum(make_s3(1, 1)), 1, 0)
    assert total.numerator.is_zero()


def test_specialize_unbalanced_at_y_zero():
    data = FixedPointData(2, (FixedPoint((3, -2), 1), FixedPoint((-3, 2), 1)))
    total = specialize(rigidity_sum(data), 1, 0)
    assert not total.numerator.is_zero()


def test_specialize_at_origin_kills_numerator():
    rng = random.Random(14)
    for _ in range(10):
        data = random_data(rng, max_abs=3)
        assert specialize(rigidity_sum(data), 0, 0).numerator.is_zero()


def test_substitute_x_pow_positive_factor():
    # (x z^b + y) at x = -z^a, y = 1 becomes 1 - z^{a+b}
    f = point_term(FixedPoint((2,), 1))
    g = substitute_x_pow(f, 3)
    assert g.numerator == LaurentZ({0: ONE, 5: -ONE})
    assert g.denominator == (2,)


def test_substitute_x_pow_negative_factor():
    # -(x + y z^b) at x = -z^a, y = 1 becomes z^a - z^b
    f = point_term(FixedPoint((-2,), 1))
    g = substitute_x_pow(f, 3)
    assert g.numerator == LaurentZ({3: ONE, 2: -ONE})


def test_substitute_x_pow_ah_pattern():
    # x y^2 - x^2 y at x = -z^a, y = 1 gives -z^a - z^{2a}
    ah = ah_constant(make_s3(1, 1))
    f = FactoredFraction(LaurentZ.from_poly(ah), ())
    for a in (1, 2, 5):
        g = substitute_x_pow(f, a)
        assert g.numerator == LaurentZ({a: -ONE, 2 * a: -ONE})


def test_substitute_x_pow_rejects_bad_exponent():
    with pytest.raises(ValueError):
        substitute_x_pow(FactoredFraction.zero(), 0)


# -- symmetry invariants -----------------------------------------------------


def permuted_copy(rng, data):
    points = list(data.points)
    rng.shuffle(points)
    shuffled = []
    for p in points:
        ws = list(p.weights)
        rng.shuffle(ws)
        shuffled.append(FixedPoint(tuple(ws), p.sign))
    return FixedPointData(data.n, tuple(shuffled))


def negated_copy(data):
    return FixedPointData(
        data.n,
        tuple(FixedPoint(tuple(-w for w in p.weights), p.sign) for p in data.points),
    )


def scaled_copy(data, t):
    return FixedPointData(
        data.n,
        tuple(FixedPoint(tuple(t * w for w in p.weights), p.sign) for p in data.points),
    )


def swapped_monomial_sum(data):
    total = PolyXY.zero()
    for p in data.points:
        coeff = Fraction(p.sign if p.s_plus % 2 == 0 else -p.sign)
        total = total + PolyXY.monomial(p.s_minus, p.s_plus, coeff)
    return total


def test_symmetry_invariants_randomized():
    rng = random.Random(15)
    for _ in range(30):
        data = random_data(rng, max_abs=4)
        base = is_rigid(data)
        perm = is_rigid(permuted_copy(rng, data))
        assert perm.rigid == base.rigid and perm.ah_constant == base.ah_constant
        neg = is_rigid(negated_copy(data))
        assert neg.rigid == base.rigid
        assert neg.ah_constant == swapped_monomial_sum(data)
        for t in (2, 3):
            scaled = is_rigid(scaled_copy(data, t))
            assert scaled.rigid == base.rigid
            assert scaled.ah_constant == base.ah_constant
        assert base.ah_constant.is_homogeneous(data.n)


def test_rigid_families_round_trip_through_constant_extraction():
    for data in (make_l1(4), make_s3(2, 3), make_z((1, -5, 2))):
        assert fraction_is_constant(rigidity_sum(data)) == ah_constant(data)


def test_weight_gcd():
    assert weight_gcd(make_l1(6)) == 6
    assert weight_gcd(make_s3(2, 4)) == 2
    assert weight_gcd(make_z((3, -5))) == 1


# -- validation ---------------------------------------------------------------


def test_fixed_point_validation():
    with pytest.raises(ValueError):
        FixedPoint((0,), 1)
    with pytest.raises(ValueError):
        FixedPoint((1,), 2)
    with pytest.raises(ValueError):
        FixedPoint((), 1)


def test_fixed_point_data_validation():
    with pytest.raises(ValueError):
        FixedPointData(2, (FixedPoint((1,), 1),))
    with pytest.raises(ValueError):
        FixedPointData(0, (FixedPoint((1,), 1),))
    with pytest.raises(ValueError):
        FixedPointData(1, ())
