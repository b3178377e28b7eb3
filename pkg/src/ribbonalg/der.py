"""Derivations D = a*t*d/dx + b*t^2*d/dt and their exponentials.

``der_exp`` sends D to the automorphism sum_k D^k / k!, a bijection onto the
automorphisms with character 1; ``der_log`` inverts it by solving for the
coefficients of b and a alternately, lowest power of t first.
"""

from fractions import Fraction
from math import factorial

from .aut import Automorphism, aut_compose, aut_xi
from .errors import CharacterNotOne, OrderMismatch, OrderTooSmall, WrongOrder
from .exactfield import RF_ONE, RF_ZERO, as_ratfunc, rf_derivative
from .jet import Jet, jet_dt, jet_dx

__all__ = [
    "Derivation",
    "der_apply",
    "der_exp",
    "der_log",
    "der_star",
    "der_star_n3",
    "der_exp_n3",
    "der_rebase",
]


class Derivation:
    __slots__ = ("n", "a", "b")

    def __init__(self, n, a, b):
        if n < 2:
            raise OrderTooSmall(f"derivations need n >= 2, got {n}")
        a = a if isinstance(a, Jet) else Jet(a, n - 1)
        b = b if isinstance(b, Jet) else Jet(b, n - 2)
        if a.n != n - 1 or b.n != n - 2:
            raise OrderMismatch(f"a must have order {n - 1} and b order {n - 2}")
        self.n, self.a, self.b = n, a, b

    @classmethod
    def zero(cls, n):
        return cls(n, Jet.zero(n - 1), Jet.zero(n - 2))

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other):
        if isinstance(other, Derivation):
            return self.n == other.n and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash(("Der", self.a, self.b))

    def __repr__(self):
        return f"Derivation(n={self.n}, a={self.a!r}, b={self.b!r})"

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        if other.n != self.n:
            raise OrderMismatch(f"orders {self.n} and {other.n} differ")
        return Derivation(self.n, self.a + other.a, self.b + other.b)

    def scale(self, c):
        return Derivation(self.n, self.a.scale(c), self.b.scale(c))

    def __call__(self, u):
        return der_apply(self, u)


def der_apply(D, u):
    n = D.n
    if u.n != n:
        raise OrderMismatch(f"jet of order {u.n} under derivation of order {n}")
    x_part = D.a.times_t() * jet_dx(u)
    t_part = (D.b * jet_dt(u).truncate(n - 2)).times_t().times_t()
    return x_part + t_part


def der_exp(D):
    n = D.n
    sum_x = Jet.x(n)
    sum_t = Jet.t(n)
    px, pt = sum_x, sum_t
    for k in range(1, n):
        px = der_apply(D, px)
        pt = der_apply(D, pt)
        w = Fraction(1, factorial(k))
        sum_x = sum_x + px.scale(w)
        sum_t = sum_t + pt.scale(w)
    return Automorphism(n, (sum_x - Jet.x(n)).div_t(), sum_t.div_t())


def der_exp_n3(D):
    """Closed form of the exponential for n = 3."""
    if D.n != 3:
        raise WrongOrder("closed form needs n = 3")
    a0, a1 = D.a.coeffs
    (b,) = D.b.coeffs
    mu1 = a1 + a0 * Fraction(1, 2) * (rf_derivative(a0) + b)
    return Automorphism(3, [a0, mu1], [RF_ONE, b])


def der_log(phi):
    if aut_xi(phi) != RF_ONE:
        raise CharacterNotOne("logarithm needs an automorphism with character 1")
    n = phi.n
    a = [RF_ZERO] * (n - 1)
    b = [RF_ZERO] * (n - 2)
    a[0] = phi.mu.coeffs[0]
    for k in range(1, n - 1):
        cur = der_exp(Derivation(n, a, b))
        b[k - 1] = phi.nu.coeffs[k] - cur.nu.coeffs[k]
        cur = der_exp(Derivation(n, a, b))
        a[k] = phi.mu.coeffs[k] - cur.mu.coeffs[k]
    return Derivation(n, a, b)


def der_star(D2, D1):
    """The derivation whose exponential is exp(D2) o exp(D1)."""
    if D2.n != D1.n:
        raise OrderMismatch(f"orders {D2.n} and {D1.n} differ")
    return der_log(aut_compose(der_exp(D2), der_exp(D1)))


def der_star_n3(D2, D1):
    if D2.n != 3 or D1.n != 3:
        raise WrongOrder("closed form needs n = 3")
    a0, a1 = D1.a.coeffs
    (b,) = D1.b.coeffs
    p0, p1 = D2.a.coeffs
    (q,) = D2.b.coeffs
    c1 = a1 + p1 + Fraction(1, 2) * (rf_derivative(a0) * p0 - a0 * rf_derivative(p0)
                                     + a0 * q - b * p0)
    return Derivation(3, [a0 + p0, c1], [b + q])


def der_rebase(a, mu, nu):
    """Standard coordinates of the automorphism x -> exp(mu*t*a*d/dx)(x), t -> nu*t."""
    a = as_ratfunc(a)
    m = mu.n
    gamma = Jet.zero(m)
    mt = mu.times_t().truncate(m)
    power = Jet.one(m)
    dk = a
    for k in range(m):
        if k:
            power = power * mt
            dk = a * rf_derivative(dk)
        gamma = gamma + power.scale(dk * Fraction(1, factorial(k + 1)))
    return Automorphism(m + 1, mu * gamma, nu)
