import json

import jsonschema
import pytest

from gen import (cover2, cover3, rand_aut, rand_cochain_entries, rand_cocycle, rand_der,
                 rand_jet, rand_kernel_for, rand_rf, rng)
from ribbonalg import serialize as S
from ribbonalg.bundles import e2_matrix_cocycle
from ribbonalg.cech import Cochain0, Cover, LineCocycle, cocycle_verify, trivial_cocycle
from ribbonalg.cli import _DEFS
from ribbonalg.errors import ParseError, SchemaError

N = 100


def _line(r):
    cov = cover3()
    f = {lab: rand_rf(r, 2, nonzero=True) for lab in cov.labels}
    return LineCocycle(cov, {(i, j): f[i] / f[j] for i, j in cov.pairs()})


def _cover(r):
    return Cover({f"V{k}": sorted({r.randint(-5, 5) for _ in range(r.randint(0, 3))})
                  for k in range(r.randint(1, 4))})


GENERATORS = {
    "ratfunc": (lambda r: rand_rf(r), S.ratfunc_from_json),
    "jet": (lambda r: rand_jet(r, r.randint(0, 5)), S.jet_from_json),
    "aut": (lambda r: rand_aut(r, r.randint(2, 5), deg=3), S.aut_from_json),
    "der": (lambda r: rand_der(r, r.randint(2, 5)), S.der_from_json),
    "cover": (_cover, S.cover_from_json),
    "cocycle": (lambda r: rand_cocycle(r, r.randint(2, 3), r.choice([cover2(), cover3()])),
                S.cocycle_from_json),
    "line": (_line, S.line_from_json),
    "cochain": (lambda r: Cochain0(cover3(), rand_cochain_entries(r, 3, cover3())),
                S.cochain_from_json),
    "kernel": (lambda r: rand_kernel_for(r, rand_cocycle(r, 3)), S.kernel_from_json),
    "matrix": (lambda r: e2_matrix_cocycle(rand_cocycle(r, 2), r.randint(3, 5)),
               S.matrix_cocycle_from_json),
}


def roundtrip_corpus(kind, count=N, seed=0):
    make, decode = GENERATORS[kind]
    r = rng(1000 + seed + sorted(GENERATORS).index(kind))
    for _ in range(count):
        value = make(r)
        doc = json.loads(json.dumps(S.to_json(value), sort_keys=True))
        yield value, doc, decode(doc)


@pytest.mark.parametrize("kind", sorted(GENERATORS))
def test_roundtrip(kind):
    for value, doc, back in roundtrip_corpus(kind):
        assert S.to_json(back) == doc
        assert back == value


@pytest.mark.parametrize("kind", sorted(set(GENERATORS) & set(_DEFS)))
def test_documents_match_schema(kind):
    validator = jsonschema.Draft202012Validator({"$ref": f"#/$defs/{kind}", "$defs": _DEFS})
    for _, doc, _ in roundtrip_corpus(kind, count=20, seed=7):
        validator.validate(doc)


def test_encoded_report():
    c = rand_cocycle(rng(3), 3)
    assert S.to_json(cocycle_verify(c)) == {"pass": True, "failures": [], "irregular": []}


def test_decode_errors_carry_location():
    with pytest.raises(ParseError) as info:
        S.jet_from_json({"n": 2, "coeffs": ["x", "x^"]}, "/jet")
    assert info.value.location == {"path": "/jet/coeffs/1", "offset": 2, "expected": ["integer"]}
    with pytest.raises(SchemaError) as info:
        S.jet_from_json({"n": 3, "coeffs": ["x"]}, "/u")
    assert info.value.location == {"path": "/u/coeffs"}
    with pytest.raises(SchemaError):
        S.cover_from_json({"opens": {"U0": ["one"]}})
    with pytest.raises(SchemaError):
        S.cover_from_json({"opens": {"U|0": []}})
    cov = {"opens": {"U0": ["0"], "U1": ["1"]}}
    with pytest.raises(SchemaError):
        S.line_from_json({"cover": cov, "entries": {"U0-U1": "2"}})
    with pytest.raises(SchemaError):
        S.line_from_json({"cover": cov, "entries": {"U0|U0": "2"}})


def test_reversed_key_in_json_is_inverted():
    cov = {"opens": {"U0": ["0"], "U1": ["1"]}}
    line = S.line_from_json({"cover": cov, "entries": {"U1|U0": "x"}})
    assert S.to_json(line)["entries"] == {"U0|U1": "(1)/(x)"}


def test_trivial_cocycle_lists_every_pair():
    line = _line(rng(4))
    doc = S.to_json(trivial_cocycle(line, 3))
    assert sorted(doc["entries"]) == ["U0|U1", "U0|U2", "U1|U2"]
