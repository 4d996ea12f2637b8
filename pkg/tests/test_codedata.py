import json
from dataclasses import replace

import pytest

from diffag import codedata as cdm
from diffag.codedata import CodeDataError, NotANongap, validate


def test_serialization_round_trip(herm3):
    text = cdm.serialize(herm3)
    back = cdm.load(text)
    assert cdm.same(back, herm3)
    assert back.S == herm3.S and back.eta == herm3.eta
    assert json.loads(text)["kind"] == "codedata"


def test_load_rejects_garbage():
    with pytest.raises(CodeDataError):
        cdm.load("{not json")
    with pytest.raises(CodeDataError):
        cdm.load(json.dumps({"kind": "goppa"}))
    with pytest.raises(CodeDataError):
        cdm.load(json.dumps({"kind": "codedata", "n": 3}))


def _broken(code, **kw):
    return replace(code, **kw)


@pytest.mark.parametrize("mutate,name", [
    (lambda c: {"b": (c.b[0] + 1,) + c.b[1:]}, "Apery residue"),
    (lambda c: {"eta": (c.eta[1], c.eta[0], c.eta[2])}, "eta leading position"),
    (lambda c: {"h": (c.h[1],) + c.h[1:]}, "res(h) not a unit vector"),
    (lambda c: {"S": tuple(reversed(c.S))}, "S order"),
    (lambda c: {"S": (1,) + c.S[1:]}, "S membership"),
    (lambda c: {"gen": (c.gen[1],) + c.gen[1:]}, "gen row mismatch"),
])
def test_validation_names_the_failure(herm3, mutate, name):
    with pytest.raises(CodeDataError, match=name.replace("(", r"\(").replace(")", r"\)")):
        validate(_broken(herm3, **mutate(herm3)))


def test_eta_with_nonzero_residue_rejected(herm3):
    F = herm3.field
    e0 = herm3.eta[0]
    bumped = ([F.add(e0[0][0], 1)] + e0[0][1:], [], [])
    with pytest.raises(CodeDataError, match="res"):
        validate(_broken(herm3, eta=(bumped,) + herm3.eta[1:]))


def test_monomials(herm3):
    assert herm3.phibar_index(-13) == (2, 0)
    assert herm3.phibar_index(0) == (0, 3)
    with pytest.raises(NotANongap):
        herm3.phibar_index(-8)
    assert [s for s in range(-14, 4) if herm3.is_nongap(s)] == \
        [-13, -10, -9, -7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3]
    assert [x for x in range(10) if herm3.in_lambda(x)] == [0, 3, 4, 6, 7, 8, 9]
    with pytest.raises(NotANongap):
        herm3.phi(5)


def test_expand_combine_inverse(herm3):
    w = herm3.h[7]
    assert herm3.combine(herm3.expand(w)) == [list(p) for p in w]


def test_instrumentation_bounds(herm3):
    assert herm3.N_h == 10
    assert herm3.N_eta == (26 + 9 + 2) // 3
    assert herm3.N_deg == 13
    assert herm3.N_iter == 32


def test_zero_vector_lead():
    lead = cdm.weighted_lead(cdm.zero_vec(3), (0, 4, 8), 3)
    assert lead[1] is None
