"""Truncated series ring K[t]/(t^n) with K = Q(x).

A :class:`Jet` carries its truncation order ``n`` and exactly ``n``
coefficients.  Binary operations insist on equal orders; moving between
orders is explicit via :meth:`Jet.truncate` and :meth:`Jet.extend`.
"""

from fractions import Fraction
from math import factorial
from numbers import Rational

from .errors import NonUnit, NotDivisibleByT, OrderMismatch, OrderTooSmall
from .exactfield import RF_ONE, RF_ZERO, Poly, RatFunc, as_ratfunc, rf_derivative

__all__ = ["Jet", "jet_invert", "jet_dx", "jet_dt", "jet_substitute"]


class Jet:
    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, coeffs, n=None):
        cs = [as_ratfunc(c) for c in coeffs]
        if n is None:
            n = len(cs)
        if n < 0:
            raise ValueError("negative truncation order")
        if len(cs) > n:
            if any(not c.is_zero() for c in cs[n:]):
                raise ValueError(f"{len(cs)} coefficients do not fit in order {n}")
            cs = cs[:n]
        cs.extend([RF_ZERO] * (n - len(cs)))
        self.n = n
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        j = object.__new__(cls)
        j.n = len(coeffs)
        j.coeffs = coeffs
        j._hash = None
        return j

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls._raw((RF_ZERO,) * n)

    @classmethod
    def one(cls, n):
        return cls.const(RF_ONE, n)

    @classmethod
    def const(cls, c, n):
        if n == 0:
            return cls._raw(())
        return cls._raw((as_ratfunc(c),) + (RF_ZERO,) * (n - 1))

    @classmethod
    def x(cls, n):
        return cls.const(RatFunc.x(), n)

    @classmethod
    def t(cls, n):
        """The jet t (zero when n = 1)."""
        return cls.monomial(RF_ONE, 1, n)

    @classmethod
    def monomial(cls, c, k, n):
        cs = [RF_ZERO] * n
        if k < n:
            cs[k] = as_ratfunc(c)
        return cls._raw(tuple(cs))

    # -- basics -----------------------------------------------------------
    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_unit(self):
        return self.n > 0 and not self.coeffs[0].is_zero()

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Jet", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Jet(n={self.n}, {[str(c) for c in self.coeffs]})"

    def truncate(self, m):
        if m > self.n:
            raise OrderMismatch(f"cannot truncate order {self.n} to {m}")
        return Jet._raw(self.coeffs[:m])

    def extend(self, m):
        if m < self.n:
            raise OrderMismatch(f"cannot extend order {self.n} to {m}")
        return Jet._raw(self.coeffs + (RF_ZERO,) * (m - self.n))

    def resize(self, m):
        return self.truncate(m) if m <= self.n else self.extend(m)

    def times_t(self):
        """Multiply by t, raising the order by one (no information lost)."""
        return Jet._raw((RF_ZERO,) + self.coeffs)

    def div_t(self):
        """Divide by t; defined for zero constant term, lowers the order by one."""
        if self.n == 0:
            raise OrderTooSmall("cannot divide the order-0 jet by t")
        if not self.coeffs[0].is_zero():
            raise NotDivisibleByT("constant coefficient is nonzero")
        return Jet._raw(self.coeffs[1:])

    def map(self, f):
        return Jet._raw(tuple(f(c) for c in self.coeffs))

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Jet):
            if other.n != self.n:
                raise OrderMismatch(f"orders {self.n} and {other.n} differ")
            return other
        if isinstance(other, (RatFunc, Poly, Rational)):
            return Jet.const(other, self.n)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return Jet._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Jet._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return Jet._raw(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = as_ratfunc(c)
        if c.is_zero():
            return Jet.zero(self.n)
        return Jet._raw(tuple(a * c for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (RatFunc, Poly, Rational)):
            return self.scale(other)
        other = self._check(other)
        if other is None:
            return NotImplemented
        n = self.n
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i in range(n) if not a[i].is_zero()]
        nz_b = [j for j in range(n) if not b[j].is_zero()]
        out = [RF_ZERO] * n
        for i in nz_a:
            ai = a[i]
            for j in nz_b:
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + ai * b[j]
        return Jet._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return jet_invert(self) ** (-k)
        result = Jet.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (RatFunc, Poly, Rational)):
            return self.scale(as_ratfunc(other).inverse())
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * jet_invert(other)

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * jet_invert(self)


def jet_invert(u):
    """Inverse of a unit jet, solved one coefficient at a time."""
    if not u.is_unit():
        raise NonUnit("constant t-coefficient is zero")
    n = u.n
    c0inv = u.coeffs[0].inverse()
    v = [RF_ZERO] * n
    v[0] = c0inv
    for k in range(1, n):
        acc = RF_ZERO
        for i in range(1, k + 1):
            if not u.coeffs[i].is_zero():
                acc = acc + u.coeffs[i] * v[k - i]
        v[k] = -(acc * c0inv)
    return Jet._raw(tuple(v))


def jet_dx(u):
    return Jet._raw(tuple(rf_derivative(c) for c in u.coeffs))


def jet_dt(u):
    """The t-derivative, one order lower."""
    if u.n < 2:
        raise OrderTooSmall("jet_dt needs order at least 2")
    return Jet._raw(tuple(u.coeffs[k] * k for k in range(1, u.n)))


def _poly_at(p, X):
    acc = Jet.zero(X.n)
    for c in reversed(p.coeffs):
        acc = acc * X + Jet.const(c, X.n)
    return acc


def jet_substitute(alpha, X):
    """alpha(X) for a rational function alpha, via Horner on numerator and denominator."""
    alpha = as_ratfunc(alpha)
    num = _poly_at(alpha.num, X)
    den = _poly_at(alpha.den, X)
    if not den.is_unit():
        raise NonUnit("denominator is not a unit after substitution")
    return num * jet_invert(den)


def taylor_shift(alpha, mu_t, n):
    """Sum over k < n of alpha^{(k)}/k! * (mu_t)^k, with mu_t a jet in (t)."""
    out = Jet.zero(n)
    power = Jet.one(n)
    d = as_ratfunc(alpha)
    for k in range(n):
        if k:
            power = power * mu_t
            d = rf_derivative(d)
            if power.is_zero():
                break
        if not d.is_zero():
            out = out + power.scale(d * Fraction(1, factorial(k)))
    return out
