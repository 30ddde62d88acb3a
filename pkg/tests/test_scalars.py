import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from setfield import scalars
from setfield.scalars import (GAUSSIAN, KINDS, OCTONION, QUATERNION,
                              GaussianRational, Octonion, Quaternion,
                              abelianize, conjugate, format_scalar, invert,
                              is_unit, norm_sq, parse_scalar, product_right)

finite = st.floats(min_value=-3, max_value=3, allow_nan=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)
octs = st.builds(lambda *c: Octonion(c), *([finite] * 8))


def test_conjugate_examples():
    assert conjugate(2 + 3j) == 2 - 3j
    assert conjugate(Quaternion(0, 1, 0, 0)) == Quaternion(0, -1, 0, 0)
    assert conjugate(5.0) == 5.0


def test_conjugate_involution():
    q = Quaternion(1, -2, 3, 0.5)
    assert conjugate(conjugate(q)) == q


def test_norm_sq_examples():
    assert norm_sq(Quaternion(1, 2, 3, 0)) == 14
    half = GaussianRational(Fraction(1, 2), Fraction(1, 2))
    assert norm_sq(half) == Fraction(1, 2)
    e5 = Octonion(tuple(1.0 if k == 5 else 0.0 for k in range(8)))
    assert norm_sq(e5) == 1.0


def test_quaternion_table():
    i = Quaternion(0, 1, 0, 0)
    j = Quaternion(0, 0, 1, 0)
    k = Quaternion(0, 0, 0, 1)
    assert i * j == k
    assert j * k == i
    assert k * i == j
    assert i * i == Quaternion(-1)


def test_quaternion_commutator_is_minus_one():
    i = Quaternion(0, 1, 0, 0)
    j = Quaternion(0, 0, 1, 0)
    comm = product_right([i, j, invert(i), invert(j)])
    assert comm == Quaternion(-1)


def test_octonion_units_square_to_minus_one():
    for k in range(1, 8):
        e = Octonion(tuple(1.0 if m == k else 0.0 for m in range(8)))
        assert (e * e) == Octonion(-1)


def test_invert_examples():
    assert invert(1j) == -1j
    s = 1 / math.sqrt(2)
    q = Quaternion(s, s, 0, 0)
    qi = invert(q)
    assert scalars.approx_equal(qi, Quaternion(s, -s, 0, 0), 1e-12)
    g = invert(GaussianRational(1, 1))
    assert g == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(ZeroDivisionError):
        invert(GaussianRational(0))


def test_abelianize_examples():
    assert abelianize(Quaternion(-1)) == 1.0
    assert abelianize(3j) == 3j
    assert abelianize(Quaternion(0, 0, 0, 2)) == 2.0
    with pytest.raises(ValueError):
        abelianize(Octonion(1))


def test_abelianize_multiplicative_on_random_products():
    rng = random.Random(5)
    for _ in range(100):
        a = scalars.random_nonzero(QUATERNION, rng)
        b = scalars.random_nonzero(QUATERNION, rng)
        lhs = abelianize(a * b)
        rhs = abelianize(a) * abelianize(b)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_is_unit_examples():
    assert is_unit(cmath.exp(2j * cmath.pi / 7))
    assert is_unit(Quaternion(0.5, 0.5, 0.5, 0.5))
    assert not is_unit(2 + 0j)
    assert is_unit(GaussianRational(0, -1))
    assert not is_unit(GaussianRational(Fraction(1, 2), Fraction(1, 2)))


def test_gaussian_unit_circle_point_is_exact():
    # |3/5 + 4/5 i|^2 = 1 exactly, so the exact-kind unit test must accept it
    g = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    assert norm_sq(g) == 1
    assert is_unit(g)


@given(quats, quats)
@settings(max_examples=80)
def test_quaternion_norm_composition(a, b):
    lhs = norm_sq(a * b)
    rhs = norm_sq(a) * norm_sq(b)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


@given(octs, octs)
@settings(max_examples=80)
def test_octonion_norm_composition(a, b):
    lhs = norm_sq(a * b)
    rhs = norm_sq(a) * norm_sq(b)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_gaussian_norm_composition_exact():
    rng = random.Random(2)
    for _ in range(50):
        a = scalars.random_scalar(GAUSSIAN, rng)
        b = scalars.random_scalar(GAUSSIAN, rng)
        assert norm_sq(a * b) == norm_sq(a) * norm_sq(b)


@given(quats, quats, quats)
@settings(max_examples=60)
def test_quaternion_associativity(a, b, c):
    lhs = (a * b) * c
    rhs = a * (b * c)
    assert scalars.approx_equal(lhs, rhs, 1e-9)


def test_gaussian_associativity_exact():
    rng = random.Random(19)
    for _ in range(40):
        a, b, c = (scalars.random_scalar(GAUSSIAN, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_complex_norm_composition():
    rng = random.Random(21)
    for _ in range(40):
        a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        b = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        lhs = norm_sq(a * b)
        rhs = norm_sq(a) * norm_sq(b)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, rhs)


@given(octs, octs, octs)
@settings(max_examples=60)
def test_octonion_moufang_identity(a, b, c):
    lhs = a * (b * (a * c))
    rhs = ((a * b) * a) * c
    scale = max(1.0, math.sqrt(norm_sq(a)) ** 2 * math.sqrt(norm_sq(b))
                * math.sqrt(norm_sq(c)))
    assert math.sqrt(norm_sq(lhs - rhs)) <= 1e-12 * scale


@given(quats, quats)
@settings(max_examples=60)
def test_conjugation_antiautomorphism_quaternions(a, b):
    assert scalars.approx_equal(conjugate(a * b), conjugate(b) * conjugate(a),
                                1e-9)


@given(octs, octs)
@settings(max_examples=60)
def test_conjugation_antiautomorphism_octonions(a, b):
    assert scalars.approx_equal(conjugate(a * b), conjugate(b) * conjugate(a),
                                1e-9)


def test_gaussian_exactness_no_drift():
    a = GaussianRational(Fraction(1, 3), Fraction(1, 7))
    acc = GaussianRational(1)
    for _ in range(20):
        acc = acc * a
    for _ in range(20):
        acc = acc * invert(a)
    assert acc == GaussianRational(1)
    assert invert(a) * a == GaussianRational(1)


def test_product_right_bracketing_matters_for_octonions():
    rng = random.Random(9)
    found = False
    for _ in range(20):
        a, b, c = (scalars.random_nonzero(OCTONION, rng) for _ in range(3))
        right = product_right([a, b, c])
        left = (a * b) * c
        assert scalars.approx_equal(right, a * (b * c), 1e-9)
        if not scalars.approx_equal(right, left, 1e-9):
            found = True
    assert found, "octonions should witness non-associativity"


def test_parse_scalar_literals():
    assert parse_scalar("1.5") == 1.5
    assert parse_scalar("2+3i") == 2 + 3j
    assert parse_scalar("1+2i+3j+4k") == Quaternion(1, 2, 3, 4)
    assert parse_scalar("-i") == -1j
    assert parse_scalar("o(1,0,0,0,0,0,0,1)") == Octonion((1, 0, 0, 0, 0, 0, 0, 1))
    assert parse_scalar("q(3/4+1/4i)") == GaussianRational(Fraction(3, 4),
                                                           Fraction(1, 4))
    assert parse_scalar("q(-1/2i)") == GaussianRational(0, Fraction(-1, 2))


def test_parse_with_forced_kind():
    assert parse_scalar("2", KINDS["quaternion"]) == Quaternion(2)
    assert parse_scalar("2", KINDS["complex"]) == 2 + 0j
    assert parse_scalar("3/4", KINDS["gaussian"]) == GaussianRational(Fraction(3, 4))


def test_format_round_trips():
    values = [1.25, 2 - 3j, Quaternion(1, -2, 3, -4),
              Octonion((1, 2, 0, 0, 0, 0, 0, -1)),
              GaussianRational(Fraction(3, 4), Fraction(-1, 4))]
    for v in values:
        assert parse_scalar(format_scalar(v)) == v


def test_random_unit_is_unit():
    rng = random.Random(13)
    for name, kind in KINDS.items():
        for _ in range(10):
            u = scalars.random_unit(kind, rng)
            assert is_unit(u, 1e-9), name
