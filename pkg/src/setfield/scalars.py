"""Scalar tower: reals, complexes, quaternions, octonions and exact Gaussian rationals.

All five kinds carry conjugation, the norm |a|^2 = a* a, units and (where it
exists) the abelianization map used by row-reduction determinants.  Float
kinds use machine doubles; the Gaussian rationals are exact `Fraction` pairs
so determinant identities can be checked with zero tolerance.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

DEFAULT_TOL = 1e-9


class Quaternion:
    """Hamilton quaternion w + x i + y j + z k with i j = k, j k = i, k i = j."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other):
        other = _as_quat(other)
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quat(other)
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other * self.w, other * self.x,
                              other * self.y, other * self.z)
        a, b, c, d = self.components()
        e, f, g, h = _as_quat(other).components()
        return Quaternion(a * e - b * f - c * g - d * h,
                          a * f + b * e + c * h - d * g,
                          a * g - b * h + c * e + d * f,
                          a * h + b * g - c * f + d * e)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return _as_quat(other) * self

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self):
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("inverse of zero quaternion")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        return "Quaternion(%r, %r, %r, %r)" % self.components()


def _as_quat(v):
    if isinstance(v, Quaternion):
        return v
    if isinstance(v, (int, float)):
        return Quaternion(v)
    raise TypeError("cannot mix %r with quaternions" % (v,))


class Octonion:
    """Octonion in the basis e0..e7 built by doubling the quaternions.

    The product is the Cayley-Dickson formula (a,b)(c,d) = (ac - d*b, da + bc*)
    on quaternion pairs a + b l, so e.g. e1 e2 = e3, e1 e4 = e5, e2 e4 = e6
    and every imaginary unit squares to -e0.  Multiplication is alternative
    but not associative; chained products must fix a bracketing.
    """

    __slots__ = ("c",)

    def __init__(self, *components):
        if len(components) == 1 and isinstance(components[0], (tuple, list)):
            components = tuple(components[0])
        if len(components) > 8:
            raise ValueError("octonion takes at most 8 components")
        c = [0.0] * 8
        for k, v in enumerate(components):
            c[k] = float(v)
        self.c = tuple(c)

    def components(self):
        return self.c

    def __add__(self, other):
        other = _as_oct(other)
        return Octonion(tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_oct(other)
        return Octonion(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(tuple(other * a for a in self.c))
        other = _as_oct(other)
        a = Quaternion(*self.c[:4])
        b = Quaternion(*self.c[4:])
        c = Quaternion(*other.c[:4])
        d = Quaternion(*other.c[4:])
        z1 = a * c - d.conjugate() * b
        z2 = d * a + b * c.conjugate()
        return Octonion(z1.components() + z2.components())

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return _as_oct(other) * self

    def conjugate(self):
        return Octonion((self.c[0],) + tuple(-a for a in self.c[1:]))

    def norm_sq(self):
        return sum(a * a for a in self.c)

    def inverse(self):
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("inverse of zero octonion")
        return Octonion(tuple(a / n2 for a in self.conjugate().c))

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = Octonion(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Octonion%r" % (self.c,)


def _as_oct(v):
    if isinstance(v, Octonion):
        return v
    if isinstance(v, (int, float)):
        return Octonion(v)
    raise TypeError("cannot mix %r with octonions" % (v,))


class GaussianRational:
    """Exact a + b i with rational a, b; arithmetic never rounds."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _as_gr(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gr(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gr(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm_sq(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n2 = self.norm_sq()
        if n2 == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n2, -self.im / n2)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussianRational(%r, %r)" % (str(self.re), str(self.im))


def _as_gr(v):
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, (int, Fraction)):
        return GaussianRational(v)
    raise TypeError("cannot mix %r with Gaussian rationals" % (v,))


class ScalarKind:
    """One of the five supported scalar algebras, with its zero/one and coercions."""

    def __init__(self, name, zero, one, exact, n_components):
        self.name = name
        self.zero = zero
        self.one = one
        self.exact = exact
        self.n_components = n_components

    def from_int(self, n):
        if self.name == "real":
            return n
        if self.name == "complex":
            return complex(n)
        if self.name == "quaternion":
            return Quaternion(n)
        if self.name == "octonion":
            return Octonion(n)
        return GaussianRational(n)

    def __repr__(self):
        return "ScalarKind(%s)" % self.name

    def __eq__(self, other):
        return isinstance(other, ScalarKind) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


REAL = ScalarKind("real", 0, 1, False, 1)
COMPLEX = ScalarKind("complex", 0j, 1 + 0j, False, 2)
QUATERNION = ScalarKind("quaternion", Quaternion(), Quaternion(1), False, 4)
OCTONION = ScalarKind("octonion", Octonion(), Octonion(1), False, 8)
GAUSSIAN = ScalarKind("gaussian", GaussianRational(), GaussianRational(1), True, 2)

KINDS = {k.name: k for k in (REAL, COMPLEX, QUATERNION, OCTONION, GAUSSIAN)}


def kind_of(a) -> ScalarKind:
    if isinstance(a, Quaternion):
        return QUATERNION
    if isinstance(a, Octonion):
        return OCTONION
    if isinstance(a, GaussianRational):
        return GAUSSIAN
    if isinstance(a, complex):
        return COMPLEX
    if isinstance(a, (int, float, Fraction)):
        return REAL
    raise TypeError("not a scalar: %r" % (a,))


def conjugate(a):
    if isinstance(a, (Quaternion, Octonion, GaussianRational)):
        return a.conjugate()
    if isinstance(a, complex):
        return a.conjugate()
    return a


def norm_sq(a):
    """a* a as a real number (exact Fraction for Gaussian rationals)."""
    if isinstance(a, (Quaternion, Octonion, GaussianRational)):
        return a.norm_sq()
    if isinstance(a, complex):
        return a.real * a.real + a.imag * a.imag
    return a * a


def norm(a) -> float:
    return math.sqrt(float(norm_sq(a)))


def invert(a):
    """a^-1 = a* / |a|^2; raises ZeroDivisionError on zero input."""
    if isinstance(a, (Quaternion, Octonion, GaussianRational)):
        return a.inverse()
    if a == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    if isinstance(a, complex):
        return 1.0 / a
    if isinstance(a, Fraction):
        return 1 / a
    return 1.0 / a


def is_zero(a, tol=0.0):
    if tol and not kind_of(a).exact:
        return norm_sq(a) <= tol * tol
    if isinstance(a, (Quaternion, Octonion)):
        return a.norm_sq() == 0.0
    if isinstance(a, GaussianRational):
        return not bool(a)
    return a == 0


def abelianize(a):
    """Image of a scalar in the abelianized multiplicative group (plus 0).

    Reals, complexes and Gaussian rationals are already commutative and map
    to themselves.  For quaternions the commutator subgroup is the whole unit
    sphere, so the class of a is represented by the nonnegative real |a|
    (in particular -1 maps to 1).  Octonions are rejected: there is no
    abelianized row-reduction determinant there, callers fall back to the
    norm-valued one.
    """
    if isinstance(a, Octonion):
        raise ValueError("abelianization is not defined for octonions")
    if isinstance(a, Quaternion):
        return norm(a)
    return a


def is_unit(a, tol=DEFAULT_TOL):
    n2 = norm_sq(a)
    if kind_of(a).exact:
        return n2 == 1
    return abs(float(n2) - 1.0) <= tol


def product_right(factors, kind=None):
    """Product of a sequence evaluated with right bracketing a(b(c...)).

    The bracketing only matters for octonions, but the same convention is
    applied everywhere so cross-kind comparisons test identical expressions.
    """
    factors = list(factors)
    if not factors:
        if kind is None:
            raise ValueError("empty product needs an explicit kind")
        return kind.one
    acc = factors[-1]
    for f in reversed(factors[:-1]):
        acc = f * acc
    return acc


def approx_equal(a, b, tol=DEFAULT_TOL):
    d = a - b
    if kind_of(d).exact:
        return not bool(d)
    return float(norm_sq(d)) <= tol * tol


# ---------------------------------------------------------------------------
# literal parsing / formatting (CLI surface)

_TERM = re.compile(r"([+-]?(?:\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+|))([ijk]?)")
_RAT_TERM = re.compile(r"([+-]?\d+(?:/\d+)?|[+-])(i?)")


def _parse_float_terms(text, units):
    """Sum of signed coefficient/unit terms, e.g. '1+2i-3k' -> {'':1,'i':2,'k':-3}."""
    out = dict.fromkeys(units, 0.0)
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("bad scalar literal: %r" % text)
        coeff, unit = m.group(1), m.group(2)
        if unit not in out:
            raise ValueError("unit %r not allowed in %r" % (unit, text))
        if coeff in ("", "+"):
            value = 1.0
        elif coeff == "-":
            value = -1.0
        else:
            value = float(coeff)
        out[unit] += value
        pos = m.end()
    return out


def parse_scalar(text, kind=None):
    """Parse a literal like 1.5, 2+3i, 1+2i+3j+4k, o(...), q(3/4+1/4i)."""
    text = text.strip()
    if kind is GAUSSIAN and not text.startswith("q("):
        text = "q(%s)" % text
    if text.startswith("o(") and text.endswith(")"):
        comps = [float(p) for p in text[2:-1].split(",")]
        return Octonion(comps)
    if text.startswith("q(") and text.endswith(")"):
        body = text[2:-1].replace(" ", "")
        re_part, im_part = Fraction(0), Fraction(0)
        pos = 0
        while pos < len(body):
            m = _RAT_TERM.match(body, pos)
            if not m or m.end() == pos:
                raise ValueError("bad Gaussian rational literal: %r" % text)
            coeff, unit = m.group(1), m.group(2)
            if coeff in ("+", ""):
                val = Fraction(1)
            elif coeff == "-":
                val = Fraction(-1)
            else:
                val = Fraction(coeff)
            if unit:
                im_part += val
            else:
                re_part += val
            pos = m.end()
        return GaussianRational(re_part, im_part)
    terms = _parse_float_terms(text, ("", "i", "j", "k"))
    if kind is QUATERNION or terms["j"] or terms["k"]:
        return Quaternion(terms[""], terms["i"], terms["j"], terms["k"])
    if kind is COMPLEX or terms["i"]:
        return complex(terms[""], terms["i"])
    if kind is GAUSSIAN:
        return GaussianRational(Fraction(text))
    if kind is OCTONION:
        return Octonion(terms[""])
    return terms[""]


def format_scalar(a) -> str:
    k = kind_of(a)
    if k is REAL:
        return repr(float(a)) if isinstance(a, float) else repr(a)
    if k is COMPLEX:
        return "%r%+ri" % (a.real, a.imag)
    if k is QUATERNION:
        return "%r%+ri%+rj%+rk" % a.components()
    if k is OCTONION:
        return "o(%s)" % ",".join(repr(c) for c in a.components())
    sign = "+" if a.im >= 0 else "-"
    return "q(%s%s%si)" % (a.re, sign, abs(a.im))


def to_jsonable(a):
    """JSON encoding: numbers for floats, component lists for H/O, exact strings for Q[i]."""
    k = kind_of(a)
    if k is REAL:
        return float(a) if isinstance(a, float) else a
    if k is COMPLEX:
        return [a.real, a.imag]
    if k is QUATERNION:
        return list(a.components())
    if k is OCTONION:
        return list(a.components())
    return format_scalar(a)


# ---------------------------------------------------------------------------
# random draws (seeded rng supplied by caller)

def random_scalar(kind, rng, span=2.0):
    if kind is REAL:
        return rng.uniform(-span, span)
    if kind is COMPLEX:
        return complex(rng.uniform(-span, span), rng.uniform(-span, span))
    if kind is QUATERNION:
        return Quaternion(*(rng.uniform(-span, span) for _ in range(4)))
    if kind is OCTONION:
        return Octonion(tuple(rng.uniform(-span, span) for _ in range(8)))
    return GaussianRational(Fraction(rng.randint(-4, 4), rng.randint(1, 4)),
                            Fraction(rng.randint(-4, 4), rng.randint(1, 4)))


def random_nonzero(kind, rng, span=2.0, min_norm=0.1):
    while True:
        a = random_scalar(kind, rng, span)
        if kind.exact:
            if bool(a):
                return a
        elif float(norm_sq(a)) >= min_norm * min_norm:
            return a


def random_unit(kind, rng):
    """Uniform-ish draw from the unit sphere of the kind (exact units for Q[i])."""
    if kind is GAUSSIAN:
        return rng.choice([GaussianRational(1), GaussianRational(-1),
                           GaussianRational(0, 1), GaussianRational(0, -1)])
    if kind is REAL:
        return rng.choice([-1.0, 1.0])
    a = random_nonzero(kind, rng)
    scale = 1.0 / norm(a)
    if kind is COMPLEX:
        return a * scale
    return a * scale
