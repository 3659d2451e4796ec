"""Exact scalar arithmetic: rationals and rational functions in ``s``.

Plain rationals are ``fractions.Fraction`` (already canonical: positive
denominator, reduced).  Rational functions are kept canonical with a monic
denominator and coprime numerator/denominator, so equality is plain
structural equality.
"""

from __future__ import annotations

from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    pass


class ScalarParseError(ValueError):
    pass


class Poly:
    """Polynomial in ``s`` with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of ``s^k``; the zero polynomial is the
    empty tuple, any other polynomial has a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def s(cls) -> "Poly":
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        # -1 is the sentinel degree of the zero polynomial
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(tuple(a * c for a in self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q = Poly()
        r = self
        dlead = other.leading()
        while not r.is_zero() and r.degree >= other.degree:
            shift = r.degree - other.degree
            c = r.leading() / dlead
            t = Poly([Fraction(0)] * shift + [c])
            q = q + t
            r = r - t * other
        return q, r

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclidean remainders; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """Element of Q(s) in canonical form: monic denominator, coprime parts."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif isinstance(den, (int, Fraction)):
            den = Poly.const(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator in rational function")
        g = poly_gcd(num, den)
        if not g.is_zero():
            num = num // g
            den = den // g
        lead = den.leading()
        self.num = num.scale(1 / lead)
        self.den = den.scale(1 / lead)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly.const(c))

    @classmethod
    def s(cls) -> "RatFunc":
        return cls(Poly.s())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        if isinstance(other, Poly):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"


# ---------------------------------------------------------------------------
# Field descriptors.  exactla and everything above it is generic over these.

class Field:
    def __init__(self, name, zero, one, coerce, parse, fmt):
        self.name = name
        self.zero = zero
        self.one = one
        self.coerce = coerce
        self.parse = parse
        self.fmt = fmt

    def __repr__(self):
        return f"Field({self.name})"


def _coerce_q(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def _coerce_qs(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, Poly):
        return RatFunc(x)
    raise TypeError(f"not a rational function: {x!r}")


# ---------------------------------------------------------------------------
# Scalar literal grammar: +, -, *, /, ^, parens, integers and the variable s.

class _Lexer:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def peek(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.src):
            return None
        return self.src[self.pos]

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch


def _parse_expr(lx, atom):
    val = _parse_term(lx, atom)
    while True:
        ch = lx.peek()
        if ch == "+":
            lx.take()
            val = val + _parse_term(lx, atom)
        elif ch == "-":
            lx.take()
            val = val - _parse_term(lx, atom)
        else:
            return val


def _parse_term(lx, atom):
    val = _parse_factor(lx, atom)
    while True:
        ch = lx.peek()
        if ch == "*":
            lx.take()
            val = val * _parse_factor(lx, atom)
        elif ch == "/":
            lx.take()
            rhs = _parse_factor(lx, atom)
            if not rhs:
                raise DivisionByZero("division by zero in scalar literal")
            val = val / rhs
        elif ch is not None and (ch.isdigit() or ch == "s" or ch == "("):
            # implicit multiplication, e.g. "2s"
            val = val * _parse_factor(lx, atom)
        else:
            return val


def _parse_factor(lx, atom):
    if lx.peek() == "-":
        lx.take()
        return -_parse_factor(lx, atom)
    base = _parse_atom(lx, atom)
    if lx.peek() == "^":
        lx.take()
        sign = 1
        if lx.peek() == "-":
            lx.take()
            sign = -1
        exp = _parse_int(lx)
        acc = atom(1)
        for _ in range(exp):
            acc = acc * base
        if sign < 0:
            if not acc:
                raise DivisionByZero("zero raised to negative power")
            acc = atom(1) / acc
        return acc
    return base


def _parse_int(lx) -> int:
    ch = lx.peek()
    if ch is None or not ch.isdigit():
        raise ScalarParseError(f"expected integer at position {lx.pos}")
    digits = ""
    while lx.peek() is not None and lx.peek().isdigit():
        digits += lx.take()
    return int(digits)


def _parse_atom(lx, atom):
    ch = lx.peek()
    if ch == "(":
        lx.take()
        val = _parse_expr(lx, atom)
        if lx.peek() != ")":
            raise ScalarParseError(f"expected ')' at position {lx.pos}")
        lx.take()
        return val
    if ch == "s":
        lx.take()
        return atom("s")
    if ch is not None and ch.isdigit():
        return atom(_parse_int(lx))
    raise ScalarParseError(f"unexpected character {ch!r} at position {lx.pos}")


def parse_rat(src: str) -> Fraction:
    def atom(x):
        if x == "s":
            raise ScalarParseError("variable s is not a rational number")
        return Fraction(x)

    lx = _Lexer(src)
    val = _parse_expr(lx, atom)
    if lx.peek() is not None:
        raise ScalarParseError(f"trailing input at position {lx.pos}")
    return val


def parse_ratfunc(src: str) -> RatFunc:
    def atom(x):
        if x == "s":
            return RatFunc.s()
        return RatFunc.const(x)

    lx = _Lexer(src)
    val = _parse_expr(lx, atom)
    if lx.peek() is not None:
        raise ScalarParseError(f"trailing input at position {lx.pos}")
    return val


def format_rat(x: Fraction) -> str:
    return str(x)


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            mono = _fmt_coeff(abs(c))
        elif abs(c) == 1:
            mono = "s" if k == 1 else f"s^{k}"
        else:
            mono = f"{_fmt_coeff(abs(c))}*s" if k == 1 else f"{_fmt_coeff(abs(c))}*s^{k}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f" + {mono}" if c > 0 else f" - {mono}")
    return "".join(parts)


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return format_rat(x)
    if isinstance(x, RatFunc):
        if x.den == Poly.const(1):
            return format_poly(x.num)
        return f"({format_poly(x.num)})/({format_poly(x.den)})"
    raise TypeError(f"not a scalar: {x!r}")


QQ = Field("q", Fraction(0), Fraction(1), _coerce_q, parse_rat, format_scalar)
QS = Field("qs", RatFunc.const(0), RatFunc.const(1), _coerce_qs, parse_ratfunc,
           format_scalar)

FIELDS = {"q": QQ, "qs": QS}
