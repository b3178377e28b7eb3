"""Automorphisms of A_n fixing the projection to K.

Every such automorphism is determined by two jets of order n-1: ``mu`` (with
x -> x + mu*t) and the unit ``nu`` (with t -> nu*t).  Composition uses the
order n-1 arithmetic only; inversion is done by coefficient matching.
"""


from .errors import NonUnit, NotDivisibleByT, OrderMismatch, OrderTooSmall, WrongOrder
from .exactfield import RF_ONE, rf_derivative
from .jet import Jet, jet_dt, jet_dx, jet_invert, jet_substitute, taylor_shift

__all__ = [
    "Automorphism",
    "aut_apply",
    "aut_apply_oracle",
    "aut_compose",
    "aut_invert",
    "aut_compose_n2",
    "aut_invert_n2",
    "aut_compose_n3",
    "aut_invert_n3",
    "aut_rho",
    "aut_xi",
    "aut_partials_check",
]


class Automorphism:
    __slots__ = ("n", "mu", "nu")

    def __init__(self, n, mu, nu):
        if n < 2:
            raise OrderTooSmall(f"automorphisms need n >= 2, got {n}")
        mu = mu if isinstance(mu, Jet) else Jet(mu, n - 1)
        nu = nu if isinstance(nu, Jet) else Jet(nu, n - 1)
        if mu.n != n - 1 or nu.n != n - 1:
            raise OrderMismatch(f"mu and nu must have order {n - 1}")
        if not nu.is_unit():
            raise NonUnit("nu must be a unit jet")
        self.n = n
        self.mu = mu
        self.nu = nu

    @classmethod
    def identity(cls, n):
        return cls(n, Jet.zero(n - 1), Jet.one(n - 1))

    @classmethod
    def from_images(cls, image_x, image_t):
        """Rebuild (mu, nu) from the images of x and t."""
        n = image_x.n
        if image_t.n != n:
            raise OrderMismatch("images must share one order")
        try:
            mu = (image_x - Jet.x(n)).div_t()
            nu = image_t.div_t()
        except NotDivisibleByT as exc:
            raise NotDivisibleByT("images do not fix the projection to K") from exc
        return cls(n, mu, nu)

    def is_identity(self):
        return self.mu.is_zero() and self.nu == Jet.one(self.n - 1)

    def __eq__(self, other):
        if isinstance(other, Automorphism):
            return self.n == other.n and self.mu == other.mu and self.nu == other.nu
        return NotImplemented

    def __hash__(self):
        return hash(("Aut", self.mu, self.nu))

    def __repr__(self):
        return f"Automorphism(n={self.n}, mu={self.mu!r}, nu={self.nu!r})"

    def __call__(self, u):
        return aut_apply(self, u)

    def __matmul__(self, other):
        return aut_compose(self, other)

    def inverse(self):
        return aut_invert(self)


def _apply(mu, nu, u):
    """Apply the substitution x -> x + mu*t, t -> nu*t to u, at u's order.

    ``mu`` and ``nu`` may carry more coefficients than needed; only the first
    u.n - 1 matter.
    """
    m = u.n
    if m <= 1:
        return u
    mt = mu.truncate(m - 1).times_t()
    nu = nu.truncate(m - 1)
    out = list(Jet.zero(m).coeffs)
    nu_pow = None
    # the t^k coefficient of u contributes phi(u_k) * nu^k * t^k, needed mod t^(m-k)
    for k in range(m):
        length = m - k
        if k == 1:
            nu_pow = nu
        elif k > 1:
            nu_pow = nu_pow.truncate(length) * nu.truncate(length)
        if u.coeffs[k].is_zero():
            continue
        term = taylor_shift(u.coeffs[k], mt.truncate(length), length)
        if k:
            term = term * nu_pow.truncate(length)
        for j, c in enumerate(term.coeffs):
            out[j + k] = out[j + k] + c
    return Jet._raw(tuple(out))


def aut_apply(phi, u):
    if u.n != phi.n:
        raise OrderMismatch(f"jet of order {u.n} under automorphism of order {phi.n}")
    return _apply(phi.mu, phi.nu, u)


def aut_apply_oracle(phi, u):
    """Same map as :func:`aut_apply`, via substitution into rational functions."""
    if u.n != phi.n:
        raise OrderMismatch(f"jet of order {u.n} under automorphism of order {phi.n}")
    n = phi.n
    X = Jet.x(n) + phi.mu.times_t()
    T = phi.nu.times_t()
    out = Jet.zero(n)
    power = Jet.one(n)
    for k in range(n):
        if k:
            power = power * T
        if not u.coeffs[k].is_zero():
            out = out + jet_substitute(u.coeffs[k], X) * power
    return out


def aut_compose(phi2, phi1):
    """phi2 o phi1."""
    if phi2.n != phi1.n:
        raise OrderMismatch(f"orders {phi2.n} and {phi1.n} differ")
    mu2, nu2 = phi2.mu, phi2.nu
    mu = mu2 + nu2 * _apply(mu2, nu2, phi1.mu)
    nu = nu2 * _apply(mu2, nu2, phi1.nu)
    return Automorphism(phi1.n, mu, nu)


def _preimage(mu, nu, r):
    """Solve _apply(mu, nu, w) = r for w, one t-coefficient at a time."""
    m = r.n
    inv0 = nu.coeffs[0].inverse()
    w = [c for c in Jet.zero(m).coeffs]
    scale = RF_ONE
    for k in range(m):
        res = r - _apply(mu, nu, Jet._raw(tuple(w)))
        w[k] = res.coeffs[k] * scale
        scale = scale * inv0
    return Jet._raw(tuple(w))


def aut_invert(phi):
    mu, nu = phi.mu, phi.nu
    nu_inv = jet_invert(nu)
    new_mu = _preimage(mu, nu, -(mu * nu_inv))
    new_nu = _preimage(mu, nu, nu_inv)
    return Automorphism(phi.n, new_mu, new_nu)


def aut_compose_n2(phi2, phi1):
    if phi2.n != 2 or phi1.n != 2:
        raise WrongOrder("closed form needs n = 2")
    m2, v2 = phi2.mu[0], phi2.nu[0]
    return Automorphism(2, [m2 + v2 * phi1.mu[0]], [v2 * phi1.nu[0]])


def aut_invert_n2(phi):
    if phi.n != 2:
        raise WrongOrder("closed form needs n = 2")
    v = phi.nu[0]
    return Automorphism(2, [-phi.mu[0] / v], [v.inverse()])


def aut_compose_n3(phi2, phi1):
    if phi2.n != 3 or phi1.n != 3:
        raise WrongOrder("closed form needs n = 3")
    m0, m1 = phi1.mu.coeffs
    v0, v1 = phi1.nu.coeffs
    p0, p1 = phi2.mu.coeffs
    w0, w1 = phi2.nu.coeffs
    mu0 = p0 + m0 * w0
    mu1 = p1 + m1 * w0 * w0 + rf_derivative(m0) * p0 * w0 + m0 * w1
    nu0 = v0 * w0
    nu1 = v0 * w1 + v1 * w0 * w0 + rf_derivative(v0) * p0 * w0
    return Automorphism(3, [mu0, mu1], [nu0, nu1])


def aut_invert_n3(phi):
    # The mu_1 numerator carries mu_1 * nu_0; without that factor the result
    # fails to be an inverse whenever nu_0 != 1.
    if phi.n != 3:
        raise WrongOrder("closed form needs n = 3")
    m0, m1 = phi.mu.coeffs
    v0, v1 = phi.nu.coeffs
    dm0, dv0 = rf_derivative(m0), rf_derivative(v0)
    cube = (v0 * v0 * v0).inverse()
    nu0 = v0.inverse()
    mu0 = -m0 / v0
    nu1 = (m0 * dv0 - v1) * cube
    mu1 = (m0 * (v1 - m0 * dv0 + v0 * dm0) - m1 * v0) * cube
    return Automorphism(3, [mu0, mu1], [nu0, nu1])


def aut_rho(phi):
    """Reduction G_n -> G_{n-1}."""
    if phi.n < 3:
        raise OrderTooSmall("rho needs n >= 3")
    return Automorphism(phi.n - 1, phi.mu.truncate(phi.n - 2), phi.nu.truncate(phi.n - 2))


def aut_xi(phi):
    return phi.nu.coeffs[0]


def aut_partials_check(phi, theta):
    """Check the chain rule for d/dx and d/dt of phi(theta), at order n-1."""
    n = phi.n
    if theta.n != n:
        raise OrderMismatch(f"jet of order {theta.n} under automorphism of order {n}")
    m = n - 1
    mu, nu = phi.mu, phi.nu
    image = aut_apply(phi, theta)
    # phi applied to the partials of theta, viewed at order n-1
    ph_dx = _apply(mu, nu, jet_dx(theta).truncate(m))
    ph_dt = _apply(mu, nu, jet_dt(theta))
    t_mu_dx = jet_dx(mu).times_t().truncate(m)
    t_nu_dx = jet_dx(nu).times_t().truncate(m)
    t_mu_dt = _t_dt(mu)
    t_nu_dt = _t_dt(nu)
    lhs_x = jet_dx(image).truncate(m)
    rhs_x = (Jet.one(m) + t_mu_dx) * ph_dx + t_nu_dx * ph_dt
    lhs_t = jet_dt(image)
    rhs_t = (mu + t_mu_dt) * ph_dx + (nu + t_nu_dt) * ph_dt
    return lhs_x == rhs_x and lhs_t == rhs_t


def _t_dt(u):
    """t * du/dt, same order as u."""
    return Jet._raw(tuple(c * k for k, c in enumerate(u.coeffs)))
