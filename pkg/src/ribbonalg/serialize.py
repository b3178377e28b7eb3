"""JSON encoding of every library value.

``to_json`` turns values into plain dicts/lists/strings; the ``*_from_json``
decoders assume the document already passed schema validation and attach a
JSON-pointer style ``path`` to any error they raise.
"""

from fractions import Fraction

from .aut import Automorphism
from .bundles import MatrixJetCocycle
from .cech import Cochain0, Cocycle, Cover, KernelClass, LineCocycle, Report
from .der import Derivation
from .errors import ParseError, RibbonError, SchemaError
from .exactfield import RatFunc
from .jet import Jet
from .textfmt import format_ratfunc, parse_ratfunc

PAIR_SEP = "|"


def _frac_text(q):
    return str(Fraction(q))


def pair_key(i, j):
    return f"{i}{PAIR_SEP}{j}"


def split_key(key, parts, path):
    labels = key.split(PAIR_SEP)
    if len(labels) != parts or any(not lab for lab in labels):
        raise SchemaError(f"key {key!r} must name {parts} opens separated by {PAIR_SEP!r}",
                          location={"path": path})
    return tuple(labels)


# -- encoding --------------------------------------------------------------------

def to_json(value):
    if isinstance(value, RatFunc):
        return format_ratfunc(value)
    if isinstance(value, Jet):
        return {"n": value.n, "coeffs": [format_ratfunc(c) for c in value.coeffs]}
    if isinstance(value, Automorphism):
        return {"n": value.n, "mu": to_json(value.mu), "nu": to_json(value.nu)}
    if isinstance(value, Derivation):
        return {"n": value.n, "a": to_json(value.a), "b": to_json(value.b)}
    if isinstance(value, Cover):
        return {"opens": {lab: sorted((_frac_text(p) for p in value.excluded(lab)), key=Fraction)
                          for lab in value.labels}}
    if isinstance(value, Cocycle):
        return {"n": value.n, "cover": to_json(value.cover),
                "entries": {pair_key(i, j): to_json(value.g(i, j)) for i, j in value.cover.pairs()}}
    if isinstance(value, LineCocycle):
        return {"cover": to_json(value.cover),
                "entries": {pair_key(i, j): to_json(value.s(i, j)) for i, j in value.cover.pairs()}}
    if isinstance(value, Cochain0):
        return {"n": value.n, "cover": to_json(value.cover),
                "entries": {lab: to_json(value.h(lab)) for lab in value.cover.labels}}
    if isinstance(value, KernelClass):
        return {"n": value.n, "cover": to_json(value.cover),
                "entries": {pair_key(i, j): {"theta": to_json(th), "beta": to_json(be)}
                            for (i, j) in value.cover.pairs()
                            for th, be in [value.get(i, j)]}}
    if isinstance(value, MatrixJetCocycle):
        return {"n": value.n, "cover": to_json(value.cover),
                "entries": {pair_key(i, j): to_json(value.m(i, j)) for i, j in value.cover.pairs()}}
    if isinstance(value, Report):
        return {"pass": value.passed, "failures": [to_json(f) for f in value.failures],
                "irregular": [list(p) for p in value.irregular]}
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return _frac_text(value)
    raise TypeError(f"cannot encode {type(value).__name__}")


# -- decoding --------------------------------------------------------------------

def _located(exc, path):
    loc = {"path": path}
    if isinstance(exc, ParseError):
        loc["offset"] = exc.offset
        loc["expected"] = list(exc.expected)
    if exc.location and "path" not in exc.location:
        loc = {**exc.location, **loc}
    exc.location = loc
    return exc


def ratfunc_from_json(doc, path=""):
    try:
        return parse_ratfunc(doc)
    except ParseError as exc:
        raise _located(exc, path) from None


def jet_from_json(doc, path=""):
    n = doc["n"]
    coeffs = doc["coeffs"]
    if len(coeffs) != n:
        raise SchemaError(f"jet of order {n} needs exactly {n} coefficients, got {len(coeffs)}",
                          location={"path": path + "/coeffs"})
    return Jet([ratfunc_from_json(c, f"{path}/coeffs/{k}") for k, c in enumerate(coeffs)], n)


def _build(make, path):
    try:
        return make()
    except RibbonError as exc:
        if exc.location is None:
            exc.location = {"path": path}
        raise


def aut_from_json(doc, path=""):
    mu = jet_from_json(doc["mu"], path + "/mu")
    nu = jet_from_json(doc["nu"], path + "/nu")
    return _build(lambda: Automorphism(doc["n"], mu, nu), path)


def der_from_json(doc, path=""):
    a = jet_from_json(doc["a"], path + "/a")
    b = jet_from_json(doc["b"], path + "/b")
    return _build(lambda: Derivation(doc["n"], a, b), path)


def _points(pts, path):
    out = []
    for k, p in enumerate(pts):
        try:
            out.append(Fraction(p))
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{p!r} is not a rational number",
                              location={"path": f"{path}/{k}"}) from None
    return out


def cover_from_json(doc, path=""):
    opens = doc["opens"]
    for lab in opens:
        if PAIR_SEP in lab:
            raise SchemaError(f"open label {lab!r} may not contain {PAIR_SEP!r}",
                              location={"path": f"{path}/opens/{lab}"})
    return Cover({lab: _points(pts, f"{path}/opens/{lab}") for lab, pts in opens.items()})


def _pairs(doc, cover, path, decode):
    out = {}
    for key, val in doc.items():
        i, j = split_key(key, 2, path)
        _build(lambda: (cover.index(i), cover.index(j)), f"{path}/{key}")
        if i == j:
            raise SchemaError(f"diagonal key {key!r}", location={"path": f"{path}/{key}"})
        out[(i, j)] = decode(val, f"{path}/{key}")
    return out


def cocycle_from_json(doc, path=""):
    cover = cover_from_json(doc["cover"], path + "/cover")
    entries = _pairs(doc["entries"], cover, path + "/entries", aut_from_json)
    return _build(lambda: Cocycle(doc["n"], cover, entries), path)


def line_from_json(doc, path=""):
    cover = cover_from_json(doc["cover"], path + "/cover")
    entries = _pairs(doc["entries"], cover, path + "/entries", ratfunc_from_json)
    return _build(lambda: LineCocycle(cover, entries), path)


def cochain_from_json(doc, path="", n=None):
    cover = cover_from_json(doc["cover"], path + "/cover")
    entries = {}
    for lab, val in doc["entries"].items():
        _build(lambda: cover.index(lab), f"{path}/entries/{lab}")
        entries[lab] = aut_from_json(val, f"{path}/entries/{lab}")
    return _build(lambda: Cochain0(cover, entries, doc.get("n", n)), path)


def kernel_from_json(doc, path="", cover=None):
    if "cover" in doc:
        cover = cover_from_json(doc["cover"], path + "/cover")
    if cover is None:
        raise SchemaError("kernel class needs a cover", location={"path": path})
    entries = _pairs(doc["entries"], cover, path + "/entries",
                     lambda v, p: (ratfunc_from_json(v["theta"], p + "/theta"),
                                   ratfunc_from_json(v["beta"], p + "/beta")))
    return _build(lambda: KernelClass(doc["n"], cover, entries), path)


def matrix_from_json(doc, path=""):
    return tuple(tuple(jet_from_json(e, f"{path}/{r}/{c}") for c, e in enumerate(row))
                 for r, row in enumerate(doc))


def matrix_cocycle_from_json(doc, path=""):
    cover = cover_from_json(doc["cover"], path + "/cover")
    entries = _pairs(doc["entries"], cover, path + "/entries", matrix_from_json)
    return _build(lambda: MatrixJetCocycle(doc["n"], cover, entries), path)
