"""2x2 transition matrices attached to automorphism cocycles.

Matrices are row-major tuples ``((a, b), (c, d))`` of jets, in the basis
(d/dx, t d/dt).  Function-valued matrices use jets of order 1.
"""

from .aut import Automorphism, aut_apply, aut_invert
from .cech import Report, cocycle_lift, cocycle_verify
from .errors import OrderMismatch, OrderTooSmall, PreconditionError
from .jet import Jet, jet_dt, jet_dx

__all__ = [
    "MatrixJetCocycle",
    "mat_mul",
    "mat_sub",
    "mat_identity",
    "mat_truncate",
    "e2_matrix_cocycle",
    "matrix_cocycle_verify",
    "delta_matrix",
    "delta_matrix_oracle",
    "tangent_restricted_matrix",
    "prol_check",
]


def mat_mul(A, B):
    return tuple(tuple(A[r][0] * B[0][c] + A[r][1] * B[1][c] for c in range(2))
                 for r in range(2))


def mat_sub(A, B):
    return tuple(tuple(A[r][c] - B[r][c] for c in range(2)) for r in range(2))


def mat_identity(n):
    return ((Jet.one(n), Jet.zero(n)), (Jet.zero(n), Jet.one(n)))


def mat_truncate(M, m):
    return tuple(tuple(e.truncate(m) for e in row) for row in M)


def mat_is_zero(M):
    return all(e.is_zero() for row in M for e in row)


class MatrixJetCocycle:
    def __init__(self, n, cover, entries):
        self.n = n
        self.cover = cover
        for (i, j), M in entries.items():
            if any(e.n != n for row in M for e in row):
                raise OrderMismatch(f"matrix entry for ({i}, {j}) is not of order {n}")
        self.entries = dict(entries)

    def m(self, i, j):
        return self.entries.get((i, j)) or mat_identity(self.n)

    def __eq__(self, other):
        return (isinstance(other, MatrixJetCocycle) and self.n == other.n
                and self.cover == other.cover
                and all(self.m(*p) == other.m(*p) for p in self.cover.pairs()))


def matrix_cocycle_verify(M):
    failures = []
    for i, j, k in M.cover.triples():
        residual = mat_sub(mat_mul(M.m(i, j), M.m(j, k)), M.m(i, k))
        if not mat_is_zero(residual):
            failures.append({"triple": [i, j, k], "residual": residual})
    singular = []
    for i, j in M.cover.pairs():
        (a, b), (c, d) = M.m(i, j)
        if not (a * d - b * c).is_unit():
            singular.append([i, j])
    return Report(not failures and not singular, failures, singular)


def e2_matrix_cocycle(c, n):
    """Matrices ((nu^(n-1), -nu^(n-2) mu), (0, nu^(n-2))) from a cocycle of order 2."""
    if c.n != 2:
        raise OrderMismatch("need a cocycle of order 2")
    if n < 3:
        raise OrderTooSmall("target order must be at least 3")
    entries = {}
    for i, j in c.cover.pairs():
        g = c.g(i, j)
        mu, nu = g.mu, g.nu
        w = nu ** (n - 2)
        entries[(i, j)] = ((w * nu, -(w * mu)), (Jet.zero(1), w))
    return MatrixJetCocycle(1, c.cover, entries)


def _t_dt(u):
    return Jet._raw(tuple(c * k for k, c in enumerate(u.coeffs)))


def delta_matrix(g):
    """Matrix of D -> g o D o g^{-1}; column 0 is the image of d/dx, column 1 of t d/dt.

    Row 0 (the d/dx coefficients) has order n, row 1 (t d/dt) has order n - 1.
    """
    n = g.n
    m = n - 1
    mu, nu = g.mu, g.nu
    inv = aut_invert(g)
    mp, vp = inv.mu, inv.nu
    g_mp_x = aut_apply(_lower(g, m), jet_dx(mp)) if m > 1 else jet_dx(mp)
    g_vp_x = aut_apply(_lower(g, m), jet_dx(vp)) if m > 1 else jet_dx(vp)
    a = Jet.one(n) + (nu * g_mp_x).times_t()
    c = nu * g_vp_x
    if m >= 2:
        g_mp_t = _apply_low(g, jet_dt(mp))
        g_vp_t = _apply_low(g, jet_dt(vp))
        nu2 = nu * nu
        b = (nu2 * g_mp_t.times_t() - mu).times_t()
        d = Jet.one(m) + nu2 * g_vp_t.times_t()
    else:
        b = (-mu).times_t()
        d = Jet.one(m)
    return ((a, b), (c, d))


def _lower(g, m):
    """g acting on jets of order m < n (same mu, nu truncated)."""
    return Automorphism(m, g.mu.truncate(m - 1), g.nu.truncate(m - 1))


def _apply_low(g, u):
    if u.n <= 1:
        return u
    return aut_apply(_lower(g, u.n), u)


def _der_apply(f, h, u):
    """(f d/dx + h t d/dt)(u) with f of order n and h of order n - 1."""
    return f * jet_dx(u) + (h * jet_dt(u)).times_t()


def delta_matrix_oracle(g):
    """delta_matrix computed by conjugating the basis derivations and reading off x and t."""
    n = g.n
    inv = aut_invert(g)
    x, t = Jet.x(n), Jet.t(n)
    basis = [(Jet.one(n), Jet.zero(n - 1)), (Jet.zero(n), Jet.one(n - 1))]
    cols = []
    for f, h in basis:
        img_x = aut_apply(g, _der_apply(f, h, aut_apply(inv, x)))
        img_t = aut_apply(g, _der_apply(f, h, aut_apply(inv, t)))
        cols.append((img_x, img_t.div_t()))
    return ((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1]))


def tangent_restricted_matrix(g):
    """((1 + t dmu'/dx, mu' + t dmu'/dt), (t dnu'/dx, nu' + t dnu'/dt)) for g^{-1} = (mu', nu')."""
    if g.n < 3:
        raise OrderTooSmall("restricted tangent matrices need n >= 3")
    m = g.n - 1
    inv = aut_invert(g)
    mp, vp = inv.mu, inv.nu
    a = Jet.one(m) + jet_dx(mp).times_t().truncate(m)
    b = mp + _t_dt(mp)
    c = jet_dx(vp).times_t().truncate(m)
    d = vp + _t_dt(vp)
    return ((a, b), (c, d))


def prol_check(g, u):
    """Compare the restricted tangent matrices of g and of its lift by u, pair by pair."""
    lifted = cocycle_lift(g, u)
    if not cocycle_verify(lifted).passed:
        raise PreconditionError("the lifted family is not a cocycle")
    n = g.n
    failures = []
    for i, j in g.cover.pairs():
        gij = g.g(i, j)
        (A, B), (C, D) = tangent_restricted_matrix(gij)
        (Ab, Bb), (Cb, Db) = tangent_restricted_matrix(lifted.g(i, j))
        theta, beta = u.get(i, j)
        w = (gij.nu.coeffs[0] ** (n - 1)).inverse() * (n - 1)
        shift_b = Jet.monomial(theta * w, n - 2, n - 1)
        shift_d = Jet.monomial(beta * w, n - 2, n - 1)
        residual = ((Ab - A, Bb - (B - shift_b)), (Cb - C, Db - (D - shift_d)))
        if not mat_is_zero(residual):
            failures.append({"pair": [i, j], "residual": residual})
    return Report(not failures, failures)
