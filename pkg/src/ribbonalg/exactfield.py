"""Exact arithmetic in Q[x] and in the rational function field K = Q(x).

Polynomials wrap FLINT's exact ``fmpq_poly`` and expose their coefficients as
:class:`fractions.Fraction` tuples, lowest degree first, trailing zeros
stripped.  Rational functions are kept in a
canonical form (coprime numerator and denominator, monic denominator) so that
equality is a plain component comparison.
"""

from fractions import Fraction
from numbers import Rational

from flint import fmpq, fmpq_poly

from .errors import DivisionByZero, UndefinedOrder

__all__ = [
    "Poly",
    "RatFunc",
    "rf_canonical",
    "rf_derivative",
    "rf_order_at",
    "rf_regular_on",
    "as_ratfunc",
]


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def _q(c):
    c = _frac(c)
    return fmpq(c.numerator, c.denominator)


def _to_frac(c):
    return Fraction(int(c.p), int(c.q))


class Poly:
    """A polynomial in x with rational coefficients (backed by FLINT's fmpq_poly)."""

    __slots__ = ("_p", "_coeffs", "_hash")

    def __init__(self, coeffs=()):
        self._p = fmpq_poly([_q(c) for c in coeffs])
        self._coeffs = None
        self._hash = None

    @classmethod
    def _wrap(cls, p):
        out = object.__new__(cls)
        out._p = p
        out._coeffs = None
        out._hash = None
        return out

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls._wrap(fmpq_poly([0, 1]))

    @classmethod
    def monomial(cls, c, k):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots):
        p = fmpq_poly([1])
        for r in roots:
            p = p * fmpq_poly([-_q(r), 1])
        return cls._wrap(p)

    @property
    def coeffs(self):
        """Coefficients as Fractions, lowest degree first, no trailing zeros."""
        if self._coeffs is None:
            self._coeffs = tuple(_to_frac(c) for c in self._p.coeffs())
        return self._coeffs

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return self._p.degree()

    def is_zero(self):
        return self._p.is_zero()

    def is_constant(self):
        return self._p.degree() <= 0

    @property
    def leading(self):
        return _to_frac(self._p.leading_coefficient()) if not self._p.is_zero() else Fraction(0)

    def __bool__(self):
        return not self._p.is_zero()

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._p == other._p
        if isinstance(other, Rational):
            return self._p == fmpq_poly([_q(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other._p
        if isinstance(other, Rational):
            return fmpq_poly([_q(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self._p + o)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap(-self._p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self._p * o)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        return Poly._wrap(self._p ** k)

    def scale(self, c):
        return Poly._wrap(self._p * _q(c))

    def divmod(self, other):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = divmod(self._p, other._p)
        return Poly._wrap(q), Poly._wrap(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self):
        if self._p.is_zero():
            return self
        return Poly._wrap(self._p / self._p.leading_coefficient())

    def gcd(self, other):
        """Monic gcd (zero only if both inputs are zero)."""
        return Poly._wrap(self._p.gcd(other._p))

    def derivative(self):
        return Poly._wrap(self._p.derivative())

    def __call__(self, value):
        """Evaluate at a rational point."""
        return _to_frac(self._p(_q(value)))

    def order_at(self, p):
        """Multiplicity of the root x = p (the polynomial must be nonzero)."""
        if self.is_zero():
            raise UndefinedOrder("order of the zero polynomial is undefined")
        lin = fmpq_poly([-_q(p), 1])
        k = 0
        cur = self._p
        while True:
            q, r = divmod(cur, lin)
            if not r.is_zero():
                return k
            cur = q
            k += 1


_ONE = Poly.const(1)
_ZERO = Poly([])


class RatFunc:
    """An element of Q(x) in canonical form ``num/den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        # prefer rf_canonical / as_ratfunc; this constructor canonicalizes too
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        n, d = _canonical_pair(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def const(cls, c):
        return cls._raw(Poly.const(c), _ONE)

    @classmethod
    def x(cls):
        return cls._raw(Poly.x(), _ONE)

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, _ONE)

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def is_poly(self):
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Rational, Poly)):
            return self == as_ratfunc(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFunc", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        from .textfmt import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        from .textfmt import format_ratfunc

        return format_ratfunc(self)

    def __add__(self, other):
        other = _rf_coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFunc._raw(self.num + other.num, self.den)
            return _from_parts(self.num + other.num, self.den)
        if other.den.degree == 0:
            return RatFunc._raw(self.num + other.num * self.den, self.den)
        if self.den.degree == 0:
            return RatFunc._raw(self.num * other.den + other.num, other.den)
        return _from_parts(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _rf_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _rf_coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _rf_coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc._raw(self.num * other.num, _ONE)
        # cross-cancel keeps the intermediate degrees small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1 = self.num if g1.degree == 0 else self.num.exact_div(g1)
        d2 = other.den if g1.degree == 0 else other.den.exact_div(g1)
        n2 = other.num if g2.degree == 0 else other.num.exact_div(g2)
        d1 = self.den if g2.degree == 0 else self.den.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        lead = self.num.leading
        return RatFunc._raw(self.den.scale(1 / lead), self.num.scale(1 / lead))

    def __truediv__(self, other):
        other = _rf_coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _rf_coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k)

    def derivative(self):
        return rf_derivative(self)

    def order_at(self, p):
        return rf_order_at(self, p)

    def regular_on(self, excluded):
        return rf_regular_on(self, excluded)

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise DivisionByZero(f"pole at x = {value}")
        return self.num(value) / d


def _canonical_pair(num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if den.degree > 0:
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    lead = den.leading
    if lead != 1:
        num = num.scale(1 / lead)
        den = den.scale(1 / lead)
    return num, den


def _from_parts(num, den):
    n, d = _canonical_pair(num, den)
    return RatFunc._raw(n, d)


def rf_canonical(num, den):
    """Reduced, monic-denominator representative of ``num/den``."""
    return _from_parts(num, den)


def as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc._raw(value, _ONE)
    if isinstance(value, (Rational, str)):
        return RatFunc._raw(Poly.const(_frac(value)), _ONE)
    raise TypeError(f"cannot interpret {type(value).__name__} as RatFunc")


def _rf_coerce(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc._raw(value, _ONE)
    if isinstance(value, Rational):
        return RatFunc._raw(Poly.const(value), _ONE)
    return None


RF_ZERO = RatFunc._raw(_ZERO, _ONE)
RF_ONE = RatFunc._raw(_ONE, _ONE)


def rf_derivative(f):
    """d/dx by the quotient rule, canonicalized."""
    if f.den.degree == 0:
        return RatFunc._raw(f.num.derivative(), _ONE)
    return _from_parts(f.num.derivative() * f.den - f.num * f.den.derivative(),
                       f.den * f.den)


def rf_order_at(f, p):
    """Order of vanishing at x = p; negative at a pole."""
    if f.is_zero():
        raise UndefinedOrder("order of the zero function is undefined")
    return f.num.order_at(p) - f.den.order_at(p)


def rf_regular_on(f, excluded):
    """True iff every pole of ``f`` is among the ``excluded`` rational points.

    A denominator factor without rational roots (irreducible of degree > 1)
    makes the function irregular.
    """
    rest = f.den
    for p in excluded:
        if rest.degree <= 0:
            break
        lin = Poly((-_frac(p), 1))
        while rest.degree > 0:
            q, r = rest.divmod(lin)
            if r:
                break
            rest = q
    return rest.degree <= 0
