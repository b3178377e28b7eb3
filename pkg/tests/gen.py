"""Seeded random generators for exact test data."""

import random
from fractions import Fraction

from ribbonalg.aut import Automorphism, aut_compose, aut_invert
from ribbonalg.cech import Cocycle, Cover, KernelClass, kernel_coords, kernel_element
from ribbonalg.der import Derivation
from ribbonalg.exactfield import Poly, RatFunc, rf_canonical
from ribbonalg.jet import Jet


def rng(seed):
    return random.Random(seed)


def rand_coef(r, allow_zero=True):
    while True:
        c = Fraction(r.randint(-4, 4), r.choice([1, 1, 1, 2, 3]))
        if allow_zero or c:
            return c


def rand_poly(r, deg=4, nonzero=False):
    while True:
        d = r.randint(0, deg)
        p = Poly([rand_coef(r) for _ in range(d + 1)])
        if p or not nonzero:
            return p


def rand_rf(r, deg=4, nonzero=False, p_poly=0.5):
    num = rand_poly(r, deg, nonzero)
    if r.random() < p_poly:
        return RatFunc.from_poly(num)
    den = Poly.from_roots([r.randint(-3, 3) for _ in range(r.randint(1, 2))])
    if r.random() < 0.2:
        den = den * Poly([1, 0, 1])      # an irreducible factor now and then
    return rf_canonical(num, den)


def rand_jet(r, n, deg=4, sparsity=0.2):
    return Jet([RatFunc.from_poly(Poly()) if r.random() < sparsity else rand_rf(r, deg)
                for _ in range(n)], n)


def rand_unit(r, n, deg=4):
    j = rand_jet(r, n, deg)
    if n and j[0].is_zero():
        j = j + Jet.const(rand_rf(r, deg, nonzero=True), n)
    return j


def rand_aut(r, n, deg=4):
    return Automorphism(n, rand_jet(r, n - 1, deg), rand_unit(r, n - 1, deg))


def rand_aut_small(r, n):
    # lower degrees keep deeper compositions cheap
    return rand_aut(r, n, deg=2)


def rand_der(r, n, deg=3):
    return Derivation(n, rand_jet(r, n - 1, deg), rand_jet(r, n - 2, deg))


# -- sections regular on an open -------------------------------------------------

def rand_regular(r, excluded, deg=2, nonzero=False):
    """Polynomial over a product of powers of (x - p), p excluded."""
    num = rand_poly(r, deg, nonzero)
    den = Poly.const(1)
    for p in excluded:
        if r.random() < 0.5:
            den = den * Poly([-p, 1]) ** r.randint(1, 2)
    return rf_canonical(num, den)


def rand_regular_unit(r, excluded):
    c = rand_coef(r, allow_zero=False)
    f = RatFunc.const(c)
    for p in excluded:
        k = r.randint(-1, 1)
        if k:
            f = f * RatFunc.from_poly(Poly([-p, 1])) ** k
    return f


def rand_regular_aut(r, n, excluded, deg=2):
    mu = Jet([rand_regular(r, excluded, deg) for _ in range(n - 1)], n - 1)
    nu = Jet([rand_regular_unit(r, excluded)] +
             [rand_regular(r, excluded, deg) for _ in range(n - 2)], n - 1)
    return Automorphism(n, mu, nu)


def cover3():
    return Cover({"U0": [0], "U1": [1], "U2": [-1]})


def cover2():
    return Cover({"U0": [1], "U1": [0]})


def rand_cochain_entries(r, n, cover, deg=1):
    return {lab: rand_regular_aut(r, n, cover.excluded(lab), deg) for lab in cover.labels}


def rand_cocycle(r, n, cover=None, deg=1, line=True):
    """h_i o phi_{0, s_ij} o h_j^{-1} with s_ij = f_i / f_j; a genuine cocycle."""
    cover = cover or cover3()
    h = rand_cochain_entries(r, n, cover, deg)
    f = {lab: (rand_regular_unit(r, cover.excluded(lab)) if line else RatFunc.const(1))
         for lab in cover.labels}
    inv = {lab: aut_invert(h[lab]) for lab in cover.labels}
    entries = {}
    for i, j in cover.pairs():
        s = Automorphism(n, Jet.zero(n - 1), Jet.const(f[i] / f[j], n - 1))
        entries[(i, j)] = aut_compose(h[i], aut_compose(s, inv[j]))
    return Cocycle(n, cover, entries)


def rand_kernel_for(r, g, deg=1):
    """A kernel class u such that lambda_u o g is again a cocycle."""
    n, cover = g.n, g.cover
    k = {lab: kernel_element(n, rand_regular(r, cover.excluded(lab), deg),
                             rand_regular(r, cover.excluded(lab), deg))
         for lab in cover.labels}
    entries = {}
    for i, j in cover.pairs():
        gij = g.g(i, j)
        lam = aut_compose(k[i], aut_compose(gij, aut_compose(aut_invert(k[j]), aut_invert(gij))))
        entries[(i, j)] = kernel_coords(lam)
    return KernelClass(n, cover, entries)


# -- terse constructors for fixtures ---------------------------------------------

def rf(text):
    from ribbonalg.textfmt import parse_ratfunc
    return parse_ratfunc(text) if isinstance(text, str) else RatFunc.const(text)


def jet(*coeffs):
    return Jet([rf(c) for c in coeffs], len(coeffs))


def aut(mu, nu):
    mu, nu = (mu,) if isinstance(mu, (str, int)) else mu, (nu,) if isinstance(nu, (str, int)) else nu
    return Automorphism(len(mu) + 1, jet(*mu), jet(*nu))
