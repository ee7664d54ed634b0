"""Moment-curve volume polynomial, symmetric-coefficient identities, and
distinct-volume enumeration."""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from polyrank import (
    Polynomial,
    det_m,
    det_m_sign,
    distinct_volumes,
    matrix_m,
    moment_summary,
    parse,
    symmetric_polys,
    vandermonde_matrix,
    verify_rank,
    volume_expansion_report,
    volume_poly,
)
from polyrank.moment import prefactor, volume_vars


def test_volume_poly_low_dimensions():
    assert volume_poly(1) == parse("x2 - x1", volume_vars(1))
    v2 = volume_vars(2)
    assert volume_poly(2) == parse("1/2*(x2-x1)*(x3-x1)*(x3-x2)", v2)


def test_volume_poly_equals_vandermonde_determinant():
    for d in range(1, 6):
        det = vandermonde_matrix(d).determinant()
        assert volume_poly(d) == det * Fraction(1, math.factorial(d))


def test_vandermonde_det_small_cofactor_oracle():
    # independent 3x3 cofactor expansion for d = 2
    m = vandermonde_matrix(2)
    e = m.entries
    expected = (
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
        - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
        + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    )
    assert m.determinant() == expected


def test_symmetric_polys_signs():
    v2 = volume_vars(2)
    s = symmetric_polys(2)
    assert s[0] == parse("x1*x2", v2)
    assert s[1] == parse("-(x1+x2)", v2)
    assert s[2] == parse("1", v2)
    s1 = symmetric_polys(1)
    assert s1[0] == parse("-x1", volume_vars(1))
    assert s1[1] == parse("1", volume_vars(1))


def test_symmetric_polys_reconstruct_root_product():
    for d in range(1, 7):
        vars = volume_vars(d)
        t = Polynomial.variable(vars, vars.names[-1])
        product_form = Polynomial.constant(vars, 1)
        for name in vars.names[:-1]:
            product_form = product_form * (t - Polynomial.variable(vars, name))
        s = symmetric_polys(d)
        rebuilt = Polynomial.zero(vars)
        power = Polynomial.constant(vars, 1)
        for s_l in s:
            rebuilt = rebuilt + s_l * power
            power = power * t
        assert rebuilt == product_form


def test_prefactor_times_root_product_is_volume():
    for d in range(1, 6):
        assert moment_summary(d)["factorization_ok"]


def test_moment_instance_bundle():
    from polyrank import moment_instance

    inst = moment_instance(3)
    assert inst.d == 3
    assert inst.f == volume_poly(3)
    assert inst.s[-1] == 1  # leading coefficient of the root product
    assert (inst.m.rows, inst.m.cols) == (3, 3)
    vars = inst.f.vars
    reconstruction = Polynomial.zero(vars)
    power = Polynomial.constant(vars, 1)
    t = Polynomial.variable(vars, vars.names[-1])
    for s_l in inst.s:
        reconstruction = reconstruction + s_l * power
        power = power * t
    assert inst.g * reconstruction == inst.f
    for i in range(3):
        for j in range(3):
            assert inst.m[i, j] == inst.s[i].partial(vars.names[j])


def test_matrix_m_small_cases():
    v2 = volume_vars(2)
    m = matrix_m(2)
    assert m.entries[0] == (parse("x2", v2), parse("x1", v2))
    assert m.entries[1] == (parse("-1", v2), parse("-1", v2))
    assert det_m(2) == parse("x1 - x2", v2)
    assert det_m(1) == parse("-1", volume_vars(1))


def test_det_m_squared_identity():
    for d in range(1, 6):
        vars = volume_vars(d)
        vandermonde_d = Polynomial.constant(vars, 1)
        for i in range(d):
            for j in range(i + 1, d):
                vandermonde_d = vandermonde_d * (
                    Polynomial.variable(vars, vars.names[j]) - Polynomial.variable(vars, vars.names[i])
                )
        det = det_m(d)
        assert det * det == vandermonde_d * vandermonde_d
        assert det_m_sign(d) in (-1, 1)
        assert det == det_m_sign(d) * vandermonde_d


def test_derivative_evaluation_identity():
    # For P(t) = prod_k (t - x_k): sum_k ds_k/dx_j * x_i^k equals 0 when
    # i != j and -prod_{k != j} (x_j - x_k) when i = j.
    rng = random.Random(99)
    for d in range(1, 5):
        vars = volume_vars(d)
        s = symmetric_polys(d)
        for _ in range(5):
            point = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(d + 1)]
            if len(set(point[:d])) != d:
                continue
            for j in range(d):
                for i in range(d):
                    total = sum(
                        s[level].partial(vars.names[j]).eval(point) * point[i] ** level
                        for level in range(d)
                    )
                    if i != j:
                        assert total == 0
                    else:
                        expected = Fraction(-1)
                        for k2 in range(d):
                            if k2 != j:
                                expected *= point[j] - point[k2]
                        assert total == expected


def test_verify_rank():
    for d in (2, 3, 4):
        assert verify_rank(d)
    # the rank cannot exceed the column count d
    jac_cols = matrix_m(3).cols
    assert jac_cols == 3


# ------------------------------------------------------------ volumes

def test_distinct_volumes_examples():
    assert sorted(distinct_volumes([0, 1, 2, 3], 2).volumes) == [1, 3]
    assert distinct_volumes([0, 1, 2], 2).volumes == frozenset({1})
    assert sorted(distinct_volumes([0, 1, 4], 1).volumes) == [1, 3, 4]


def test_distinct_volumes_match_volume_poly():
    # dual route: enumerate via the volume polynomial's absolute values
    rng = random.Random(4242)
    params = sorted(rng.sample(range(-10, 15), 6))
    d = 2
    f = volume_poly(d)
    expected = set()
    for triple in combinations(params, d + 1):
        expected.add(abs(f.eval(list(triple))))
    assert distinct_volumes(params, d).volumes == expected


def test_distinct_volumes_signed_mode():
    plain = distinct_volumes([0, 1, 2, 3], 2)
    signed = distinct_volumes([0, 1, 2, 3], 2, signed=True)
    assert signed.count == 2 * plain.count
    assert {abs(v) for v in signed.volumes} == set(plain.volumes)


def test_distinct_volumes_validation():
    with pytest.raises(ValueError, match="distinct"):
        distinct_volumes([1, 1, 2], 1)
    with pytest.raises(ValueError, match="d\\+1"):
        distinct_volumes([1, 2], 2)


def test_volume_translation_and_scaling_invariance():
    rng = random.Random(31)
    for case in range(10):
        params = sorted(rng.sample(range(-30, 30), 5))
        base = distinct_volumes(params, 2)
        shift = rng.randint(-9, 9)
        shifted = distinct_volumes([t + shift for t in params], 2)
        assert shifted.volumes == base.volumes
        c = rng.choice([2, 3, -2])
        scaled = distinct_volumes([c * t for t in params], 2)
        factor = Fraction(abs(c)) ** 3  # C(3, 2) pairwise differences
        assert scaled.volumes == frozenset(factor * v for v in base.volumes)
        assert scaled.count == base.count


def test_volume_expansion_report():
    report = volume_expansion_report([8, 12, 16], "random_int", 2, seed=5)
    assert report["theoretical_exponent"] == "3/2"
    assert len(report["rows"]) == 3
    assert report["fitted_exponent"] > 1.0
    counts = [row["count"] for row in report["rows"]]
    assert counts == sorted(counts)
