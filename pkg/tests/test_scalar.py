import random
from fractions import Fraction

import pytest

from propnet.scalar import (DivisionByZero, FIELDS, Poly, QQ, QS, RatFunc,
                            ScalarParseError, format_poly, format_scalar,
                            parse_rat, parse_ratfunc, poly_gcd)

from helpers import rand_poly, rand_ratfunc


def test_poly_basics():
    p = Poly([1, 2])          # 1 + 2s
    q = Poly([0, 0, 3])       # 3s^2
    assert (p + q).degree == 2
    assert (p * q) == Poly([0, 0, 3, 6])
    assert Poly([0]).is_zero and Poly().degree == -1
    assert Poly([2, 4]).monic() == Poly([Fraction(1, 2), 1])


def test_poly_divmod():
    rng = random.Random(1)
    for _ in range(100):
        a = rand_poly(rng, 4)
        b = rand_poly(rng, 2)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_poly_gcd_divides():
    rng = random.Random(2)
    for _ in range(60):
        a, b = rand_poly(rng, 3), rand_poly(rng, 3)
        g = poly_gcd(a, b)
        if g.is_zero():
            assert a.is_zero() and b.is_zero()
            continue
        assert (a % g).is_zero() and (b % g).is_zero()
        assert g == g.monic()


def test_ratfunc_canonical():
    # denominators are monic, fractions are reduced
    r = RatFunc(Poly([0, 2]), Poly([0, 0, 4]))      # 2s / 4s^2
    assert r == RatFunc(Poly([Fraction(1, 2)]), Poly([0, 1]))
    assert r.den.monic() == r.den


def test_ratfunc_field_axioms():
    rng = random.Random(3)
    for _ in range(50):
        a, b, c = (rand_ratfunc(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            assert (a / b) * b == a


def test_ratfunc_zero_division():
    with pytest.raises(DivisionByZero):
        RatFunc.const(1) / RatFunc.const(0)
    with pytest.raises(DivisionByZero):
        RatFunc(Poly([1]), Poly([0]))


def test_parse_rat():
    assert parse_rat("3/4") == Fraction(3, 4)
    assert parse_rat("-2") == -2
    assert parse_rat("(1+1)/4") == Fraction(1, 2)
    with pytest.raises(ScalarParseError):
        parse_rat("s")


def test_parse_ratfunc():
    s = RatFunc.s()
    assert parse_ratfunc("s") == s
    assert parse_ratfunc("2s") == RatFunc.const(2) * s
    assert parse_ratfunc("s^2 + 1") == s * s + RatFunc.const(1)
    assert parse_ratfunc("1/(s+1)") == RatFunc.const(1) / (s + RatFunc.const(1))
    assert parse_ratfunc("(3s - 2)/(s^2)") == \
        (RatFunc.const(3) * s - RatFunc.const(2)) / (s * s)


def test_format_round_trip():
    rng = random.Random(4)
    for _ in range(100):
        r = rand_ratfunc(rng)
        assert parse_ratfunc(format_scalar(r)) == r
    for _ in range(100):
        p = rand_poly(rng, 3)
        assert parse_ratfunc(format_poly(p)) == RatFunc(p)


def test_field_descriptors():
    assert FIELDS["q"] is QQ and FIELDS["qs"] is QS
    assert QQ.coerce(3) == Fraction(3)
    assert QS.coerce(Fraction(1, 2)) == RatFunc.const(Fraction(1, 2))
    assert QS.parse("s/2") == RatFunc.s() * QS.coerce(Fraction(1, 2))
    assert QQ.fmt(Fraction(-1, 3)) == "-1/3"
