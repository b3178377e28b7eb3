"""Cech cochains on finite covers of the affine line, valued in the automorphism groups.

An open is the affine line minus finitely many rational points.  Cocycles
store the entries g_ij for i < j (cover order); g_ji is the inverse and g_ii
the identity.  Omitted pairs are the identity.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .aut import Automorphism, aut_compose, aut_invert, aut_rho, aut_xi
from .errors import (
    CoverMismatch,
    InvariantViolation,
    KernelMembership,
    NonUnit,
    OrderMismatch,
    OrderTooSmall,
    PointPosition,
    PreconditionError,
    RegularityError,
)
from .exactfield import RF_ONE, RF_ZERO, Poly, RatFunc, as_ratfunc, rf_order_at, rf_regular_on
from .jet import Jet

__all__ = [
    "Cover",
    "Cocycle",
    "Cochain0",
    "KernelClass",
    "LineCocycle",
    "Report",
    "aut_regular_on",
    "cocycle_verify",
    "cocycle_twist",
    "trivial_cocycle",
    "cocycle_xi",
    "cocycle_rho",
    "kernel_element",
    "kernel_coords",
    "kernel_embed",
    "cocycle_lift",
    "obstruction",
    "kernel_conjugate",
    "blowup",
    "conj_regular",
    "h1_action",
    "split_law",
    "line_twist",
]


class Cover:
    """Family of opens, each given by its set of excluded points.

    Labels are kept in sorted order; that order decides which of g_ij, g_ji
    is stored.
    """

    def __init__(self, opens):
        items = opens.items() if isinstance(opens, dict) else opens
        self._opens = {}
        for label, pts in items:
            if label in self._opens:
                raise ValueError(f"duplicate open label {label!r}")
            self._opens[label] = frozenset(Fraction(p) for p in pts)
        self.labels = tuple(sorted(self._opens))
        self._opens = {lab: self._opens[lab] for lab in self.labels}
        self._index = {lab: k for k, lab in enumerate(self.labels)}

    def excluded(self, *labels):
        out = frozenset()
        for lab in labels:
            out |= self._opens[lab]
        return out

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise CoverMismatch(f"unknown open {label!r}") from None

    def pairs(self):
        return list(combinations(self.labels, 2))

    def triples(self):
        return list(combinations(self.labels, 3))

    def __eq__(self, other):
        return isinstance(other, Cover) and list(self._opens.items()) == list(other._opens.items())

    def __hash__(self):
        return hash(tuple(self._opens.items()))

    def __repr__(self):
        return f"Cover({ {k: sorted(v) for k, v in self._opens.items()} })"


def _ordered(cover, i, j):
    return cover.index(i) < cover.index(j)


class _PairFamily:
    """Shared storage for families indexed by unordered pairs of a cover."""

    def _normalize(self, cover, entries, invert):
        out = {}
        for (i, j), val in entries.items():
            if i == j:
                raise CoverMismatch(f"diagonal entry ({i}, {j}) is not stored")
            if _ordered(cover, i, j):
                out[(i, j)] = val
            else:
                out[(j, i)] = invert(val)
        return out


class Cocycle(_PairFamily):
    def __init__(self, n, cover, entries=None):
        self.n = n
        self.cover = cover
        entries = entries or {}
        for g in entries.values():
            if g.n != n:
                raise OrderMismatch(f"entry of order {g.n} in a cocycle of order {n}")
        self.entries = self._normalize(cover, entries, aut_invert)
        self._inverses = {}

    def g(self, i, j):
        if i == j:
            return Automorphism.identity(self.n)
        if _ordered(self.cover, i, j):
            return self.entries.get((i, j)) or Automorphism.identity(self.n)
        key = (j, i)
        if key not in self._inverses:
            self._inverses[key] = aut_invert(self.g(j, i))
        return self._inverses[key]

    def __eq__(self, other):
        if not isinstance(other, Cocycle):
            return NotImplemented
        return (self.n == other.n and self.cover == other.cover
                and all(self.g(i, j) == other.g(i, j) for i, j in self.cover.pairs()))

    def __repr__(self):
        return f"Cocycle(n={self.n}, {self.entries!r})"


class Cochain0:
    def __init__(self, cover, entries, n=None):
        self.cover = cover
        orders = {h.n for h in entries.values()}
        if n is None:
            if len(orders) != 1:
                raise OrderMismatch("cannot infer a single order for the 0-cochain")
            (n,) = orders
        elif orders - {n}:
            raise OrderMismatch("0-cochain entries disagree with the stated order")
        for lab in entries:
            cover.index(lab)
        self.n = n
        self.entries = dict(entries)

    def h(self, i):
        return self.entries.get(i) or Automorphism.identity(self.n)

    def __eq__(self, other):
        return (isinstance(other, Cochain0) and self.n == other.n and self.cover == other.cover
                and all(self.h(lab) == other.h(lab) for lab in self.cover.labels))


class KernelClass(_PairFamily):
    """Pairs (theta_ij, beta_ij) for i < j, describing the elements lambda_{theta beta}."""

    def __init__(self, n, cover, entries=None):
        if n < 3:
            raise OrderTooSmall("kernel classes need n >= 3")
        self.n = n
        self.cover = cover
        norm = {}
        for (i, j), (th, be) in (entries or {}).items():
            if not _ordered(cover, i, j):
                raise CoverMismatch(f"kernel class entries must be keyed i < j, got ({i}, {j})")
            norm[(i, j)] = (as_ratfunc(th), as_ratfunc(be))
        self.entries = norm

    def get(self, i, j):
        return self.entries.get((i, j), (RF_ZERO, RF_ZERO))

    def __eq__(self, other):
        if not isinstance(other, KernelClass):
            return NotImplemented
        return (self.n == other.n and self.cover == other.cover
                and all(self.get(i, j) == other.get(i, j) for i, j in self.cover.pairs()))

    def __repr__(self):
        return f"KernelClass(n={self.n}, {self.entries!r})"


class LineCocycle(_PairFamily):
    def __init__(self, cover, entries=None):
        self.cover = cover
        for v in (entries or {}).values():
            if as_ratfunc(v).is_zero():
                raise NonUnit("line cocycle entries must be nonzero")
        self.entries = self._normalize(
            cover, {k: as_ratfunc(v) for k, v in (entries or {}).items()}, RatFunc.inverse)

    def s(self, i, j):
        if i == j:
            return RF_ONE
        if _ordered(self.cover, i, j):
            return self.entries.get((i, j), RF_ONE)
        return self.s(j, i).inverse()

    def verify(self):
        bad = [(i, j, k) for i, j, k in self.cover.triples()
               if self.s(i, j) * self.s(j, k) != self.s(i, k)]
        return Report(not bad, [{"triple": list(t)} for t in bad])

    def __eq__(self, other):
        if not isinstance(other, LineCocycle):
            return NotImplemented
        return self.cover == other.cover and all(
            self.s(i, j) == other.s(i, j) for i, j in self.cover.pairs())

    def __repr__(self):
        return f"LineCocycle({self.entries!r})"


@dataclass
class Report:
    passed: bool
    failures: list = field(default_factory=list)
    irregular: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def aut_regular_on(phi, excluded):
    """All coefficients regular on the open, and nu_0 invertible there."""
    coeffs = phi.mu.coeffs + phi.nu.coeffs
    if not all(rf_regular_on(c, excluded) for c in coeffs):
        return False
    return rf_regular_on(phi.nu.coeffs[0].inverse(), excluded)


# -- cocycles --------------------------------------------------------------------

def cocycle_verify(c):
    failures = []
    for i, j, k in c.cover.triples():
        residual = aut_compose(aut_invert(c.g(i, k)), aut_compose(c.g(i, j), c.g(j, k)))
        if not residual.is_identity():
            failures.append({"triple": [i, j, k], "residual": residual})
    irregular = [[i, j] for i, j in c.cover.pairs()
                 if not aut_regular_on(c.g(i, j), c.cover.excluded(i, j))]
    return Report(not failures and not irregular, failures, irregular)


def _same_frame(a, b):
    if a.cover != b.cover:
        raise CoverMismatch("objects live on different covers")
    if a.n != b.n:
        raise OrderMismatch(f"orders {a.n} and {b.n} differ")


def cocycle_twist(c, h):
    """The cohomologous cocycle h_i g_ij h_j^{-1}."""
    _same_frame(c, h)
    inv = {lab: aut_invert(h.h(lab)) for lab in c.cover.labels}
    out = {}
    for i, j in c.cover.pairs():
        g = aut_compose(h.h(i), aut_compose(c.g(i, j), inv[j]))
        if not aut_regular_on(g, c.cover.excluded(i, j)):
            raise RegularityError(f"twisted entry ({i}, {j}) is not regular on the overlap",
                                  location={"pair": [i, j]})
        out[(i, j)] = g
    return Cocycle(c.n, c.cover, out)


def trivial_cocycle(L, n):
    if n < 2:
        raise OrderTooSmall("n must be at least 2")
    return Cocycle(n, L.cover, {
        (i, j): Automorphism(n, Jet.zero(n - 1), Jet.const(L.s(i, j), n - 1))
        for i, j in L.cover.pairs()})


def cocycle_xi(c):
    return LineCocycle(c.cover, {(i, j): aut_xi(c.g(i, j)) for i, j in c.cover.pairs()})


def cocycle_rho(c):
    if c.n < 3:
        raise OrderTooSmall("rho needs n >= 3")
    return Cocycle(c.n - 1, c.cover, {(i, j): aut_rho(c.g(i, j)) for i, j in c.cover.pairs()})


def line_twist(L, h):
    """Multiplicative coboundary action: s_ij -> h_i s_ij / h_j (missing h_i are 1)."""
    get = lambda lab: as_ratfunc(h.get(lab, RF_ONE))
    return LineCocycle(L.cover, {(i, j): get(i) * L.s(i, j) / get(j) for i, j in L.cover.pairs()})


# -- kernel of rho -----------------------------------------------------------------

def kernel_element(n, theta, beta):
    """lambda_{theta beta}: x -> x + theta t^(n-1), t -> t + beta t^(n-1)."""
    if n < 3:
        raise OrderTooSmall("kernel elements need n >= 3")
    return Automorphism(n, Jet.monomial(theta, n - 2, n - 1),
                        Jet.one(n - 1) + Jet.monomial(beta, n - 2, n - 1))


def kernel_coords(phi):
    """(theta, beta) of an element of the kernel of rho."""
    if phi.n < 3:
        raise OrderTooSmall("kernel elements need n >= 3")
    if not aut_rho(phi).is_identity():
        raise KernelMembership("automorphism is not in the kernel of rho")
    return phi.mu.coeffs[-1], phi.nu.coeffs[-1]


def kernel_embed(k):
    return {(i, j): kernel_element(k.n, *k.get(i, j)) for i, j in k.cover.pairs()}


def cocycle_lift(g, u):
    """The family lambda_{theta_ij beta_ij} o g_ij; verify it with cocycle_verify."""
    _same_frame(g, u)
    lam = kernel_embed(u)
    return Cocycle(g.n, g.cover, {p: aut_compose(lam[p], g.g(*p)) for p in g.cover.pairs()})


def obstruction(g):
    """gamma_ijk = g_ij g_jk g_ki for every triple, with its kernel coordinates."""
    if g.n < 3:
        raise OrderTooSmall("obstruction needs n >= 3")
    if not cocycle_verify(cocycle_rho(g)).passed:
        raise PreconditionError("the reductions of the lifts do not form a cocycle")
    out = {}
    for i, j, k in g.cover.triples():
        gamma = aut_compose(g.g(i, j), aut_compose(g.g(j, k), g.g(k, i)))
        out[(i, j, k)] = (gamma, *kernel_coords(gamma))
    return out


def kernel_conjugate(phi, theta, beta, check=True):
    """(theta', beta') with phi o lambda_{theta beta} o phi^{-1} = lambda_{theta' beta'}."""
    n = phi.n
    if n < 3:
        raise OrderTooSmall("kernel conjugation needs n >= 3")
    theta, beta = as_ratfunc(theta), as_ratfunc(beta)
    v0, m0 = phi.nu.coeffs[0], phi.mu.coeffs[0]
    w = v0 ** (n - 2)
    new_beta = w * beta
    new_theta = w * (v0 * theta - m0 * beta)
    if check:
        direct = aut_compose(phi, aut_compose(kernel_element(n, theta, beta), aut_invert(phi)))
        if direct != kernel_element(n, new_theta, new_beta):
            raise InvariantViolation("closed-form conjugation disagrees with direct composition")
    return new_theta, new_beta


# -- blow-up -----------------------------------------------------------------------

def _linear(P, q):
    return as_ratfunc(Poly((-Fraction(P), 1)) ** q)


def blowup(c, i0, P, q, mu, nu):
    """Modify the i0-entries by A = phi_{mu, (x-P)^q nu}: A g_{i0 j} and g_{j i0} A^{-1}."""
    P = Fraction(P)
    cover = c.cover
    cover.index(i0)
    if q < 1:
        raise PreconditionError("q must be a positive integer")
    if P in cover.excluded(i0):
        raise PointPosition(f"{P} is not in the open {i0!r}")
    others = [j for j in cover.labels if j != i0 and P not in cover.excluded(j)]
    if others:
        raise PointPosition(f"{P} lies in other opens {others}")
    if not nu.is_unit():
        raise NonUnit("nu must be a unit jet")
    A = Automorphism(c.n, mu, nu.scale(_linear(P, q)))
    A_inv = aut_invert(A)
    out = {}
    for i, j in cover.pairs():
        g = c.g(i, j)
        if i == i0:
            g = aut_compose(A, g)
        elif j == i0:
            g = aut_compose(g, A_inv)
        out[(i, j)] = g
    return Cocycle(c.n, cover, out)


def _regular_at(f, P):
    return f.is_zero() or rf_order_at(f, P) >= 0


def conj_regular(A, psi, P):
    """A o psi o A^{-1}, asserting it is regular at P with a unit nu-part there.

    For n >= 3 the assertion can trip when the mu-part of A does not vanish
    at P; it always holds when every coefficient of that mu-part does.
    """
    P = Fraction(P)
    if A.n != psi.n:
        raise OrderMismatch(f"orders {A.n} and {psi.n} differ")
    nu0 = A.nu.coeffs[0]
    q = rf_order_at(nu0, P)
    if q < 1:
        raise PreconditionError("nu-part of A must vanish at P")
    unit = A.nu.scale(_linear(P, q).inverse())
    if not all(_regular_at(f, P) for f in unit.coeffs + A.mu.coeffs):
        raise PreconditionError("A must be phi_{mu, (x-P)^q nu} with mu, nu regular at P")
    if not all(_regular_at(f, P) for f in psi.mu.coeffs + psi.nu.coeffs):
        raise PreconditionError("psi must be regular at P")
    if rf_order_at(psi.nu.coeffs[0], P) != 0:
        raise NonUnit("nu-part of psi must be a unit at P")
    chi = aut_compose(A, aut_compose(psi, aut_invert(A)))
    if not all(_regular_at(f, P) for f in chi.mu.coeffs + chi.nu.coeffs):
        raise InvariantViolation("conjugate has a pole at P")
    if rf_order_at(chi.nu.coeffs[0], P) != 0:
        raise InvariantViolation("conjugate nu-part is not a unit at P")
    return chi


# -- actions -----------------------------------------------------------------------

def h1_action(psi, g, u, check=True):
    """Transport the kernel class u under the 0-cochain psi, keeping the base cocycle g."""
    _same_frame(g, u)
    _same_frame(g, psi)
    n = g.n
    chars = {aut_xi(psi.h(lab)) for lab in g.cover.labels}
    if len(chars) != 1:
        raise PreconditionError("psi must have one common character value")
    (delta,) = chars
    if not delta.is_constant():
        raise PreconditionError("the common character value must be a constant")
    out = {}
    for i, j in g.cover.pairs():
        gij, gij_inv = g.g(i, j), g.g(j, i)
        psi_j_inv = aut_invert(psi.h(j))
        defect = aut_compose(psi.h(i), aut_compose(gij, aut_compose(psi_j_inv, gij_inv)))
        try:
            v, w = kernel_coords(defect)
        except KernelMembership:
            raise KernelMembership(f"psi does not normalize g on ({i}, {j})",
                                   location={"pair": [i, j]}) from None
        theta, beta = u.get(i, j)
        m0 = psi.h(i).mu.coeffs[0]
        new_theta = delta ** (n - 1) * theta - m0 * delta ** (n - 2) * beta + v
        new_beta = delta ** (n - 2) * beta + w
        if check:
            lam = kernel_element(n, theta, beta)
            direct = aut_compose(psi.h(i), aut_compose(
                lam, aut_compose(gij, aut_compose(psi_j_inv, gij_inv))))
            if direct != kernel_element(n, new_theta, new_beta):
                raise InvariantViolation(f"action formula disagrees on ({i}, {j})")
        out[(i, j)] = (new_theta, new_beta)
    return KernelClass(n, g.cover, out)


def split_law(nu2, nu1):
    """nu2 * nu1 = nu2 . nu1(x, nu2 t): the law of the automorphisms t -> nu t fixing K."""
    if nu2.n != nu1.n:
        raise OrderMismatch(f"orders {nu2.n} and {nu1.n} differ")
    if not (nu2.is_unit() and nu1.is_unit()):
        raise NonUnit("split law needs unit jets")
    m = nu1.n
    nt = nu2.times_t().truncate(m)
    out = Jet.zero(m)
    power = Jet.one(m)
    for k in range(m):
        if k:
            power = power * nt
        out = out + power.scale(nu1.coeffs[k])
    return nu2 * out
