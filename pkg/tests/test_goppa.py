import itertools

import pytest

from diffag import decoder as D, goppa as Gp, oracle as O, poly as P
from diffag.field import field_of_order


def al(F, k):
    return F.alpha_pow(k)


def poly_from_terms(F, terms):
    """{degree: alpha exponent or None for 1} -> coefficient list."""
    out = [0] * (max(terms) + 1)
    for d, e in terms.items():
        out[d] = 1 if e is None else al(F, e)
    return out


V = [1, 1, 1, 1, 1, 1, 1, 0]


def test_precomputed_data(goppa825):
    F = goppa825.field
    assert list(goppa825.L) == [0, 1] + [al(F, i) for i in range(1, 7)]
    assert list(goppa825.eta0) == [0, 1, 0, 0, 0, 0, 0, 0, 1]
    assert list(goppa825.h[0]) == [1, 0, 0, 0, 0, 0, 0, 1]
    assert list(goppa825.h[1]) == [0, 1, 1, 1, 1, 1, 1, 1]
    h8 = poly_from_terms(F, {7: 1, 6: None, 5: 6, 4: 5, 3: 4, 2: 3, 1: 2})
    assert list(goppa825.h[7]) == h8
    assert goppa825.gpoly == (1, 0, 1, 0, 1)
    assert (goppa825.n, goppa825.k, goppa825.k_sub, goppa825.b0) == (8, 4, 2, -3)


def test_worked_decode(goppa825):
    st = Gp.goppa_run(goppa825, V)
    assert st.output == [1, 1, 1, 1, 0, 1, 0, 0]
    assert st.mus == {3: 1, 2: 1, 1: 0, 0: 1}


def test_worked_trace(goppa825):
    F = goppa825.field
    st = Gp.goppa_run(goppa825, V, trace=True, update_g=True)
    by = {t["index"]: t for t in st.trace}
    f7 = poly_from_terms(F, {7: 1, 5: 2, 4: 4, 3: 5, 2: 3, 1: 2, 0: None})
    assert by[7]["G"] == ([], [0, 1, 0, 0, 0, 0, 0, 0, 1])
    assert by[7]["F"] == ([1], f7)
    # G^(6) is the previous F row, so its z coefficient is 1
    assert by[6]["G"] == ([1], f7)
    f6 = poly_from_terms(F, {6: 2, 5: 4, 4: 5, 3: 3, 2: 2, 1: 3})
    assert by[6]["F"] == ([0, 1], f6)
    g0 = poly_from_terms(F, {6: 2, 5: 4, 4: 4, 3: 1, 2: 2, 1: 3})
    a0 = poly_from_terms(F, {2: 3, 1: 5, 0: 4})
    assert by[0]["G"] == ([0, 1], g0)
    assert by[0]["F"] == (a0, a0)


def test_skipping_g_update_changes_nothing(goppa825):
    a = Gp.goppa_run(goppa825, V, update_g=True)
    b = Gp.goppa_run(goppa825, V)
    assert (a.output, a.mus) == (b.output, b.mus)


def test_zero_word(goppa825):
    assert Gp.goppa_decode(goppa825, [0] * 8) == [0] * 8


def test_trace_text(goppa825):
    st = Gp.goppa_run(goppa825, V, trace=True)
    text = Gp.format_trace(goppa825, st)
    assert text.splitlines()[0] == "G^(7) = (0) z + (x^8 + x) w0"
    assert "m_3 = 1" in text


def test_subfield_subcode(goppa825):
    basis = goppa825.subfield_basis
    H = goppa825.parity_check
    for row in basis:
        assert set(row) <= {0, 1}
        assert P.matvec(goppa825.field, H, list(row)) == [0] * len(H)
    assert O.min_distance_exhaustive(goppa825) == 5


def test_non_subfield_codeword_is_a_failure(goppa825):
    F = goppa825.field
    c = Gp.goppa_codeword(goppa825, [F.alpha])
    assert not goppa825.in_subfield(c)
    with pytest.raises(D.DecodingFailure):
        Gp.goppa_decode(goppa825, c)


def test_small_binary_code_corrects_one_error(goppa_gf8_small):
    code = goppa_gf8_small
    assert code.n == 4 and code.tau == 1 and code.k_sub >= 1
    assert O.min_distance_exhaustive(code) >= 3
    for _, c in O.codewords(code):
        assert Gp.goppa_decode(code, c) == c
        for pos in range(code.n):
            v = list(c)
            v[pos] ^= 1
            assert Gp.goppa_decode(code, v) == c


def test_ternary_code(goppa_gf9):
    """Odd characteristic with L a proper subset, so pi'_i is not constant."""
    code = goppa_gf9
    assert len(set(code.pi_prime)) > 1
    F = code.field
    errs = O.error_values(code)
    assert errs == [1, 2]
    for seed in range(40):
        rng = O.SplitMix64(seed)
        c = O.encode(code, O.random_message(code, rng))
        v, _ = O.add_errors(c, rng.below(code.tau + 1), rng, F, errs)
        assert Gp.goppa_decode(code, v) == c


def test_generic_decoder_agrees(goppa825, goppa_gf9):
    for code in (goppa825, goppa_gf9):
        cd = Gp.goppa_codedata(code)
        assert cd.gamma == 1 and cd.genus == 0
        for seed in range(30):
            rng = O.SplitMix64(seed)
            mu = [rng.below(code.field.q) for _ in range(code.k)]
            c = Gp.goppa_codeword(code, mu)
            v, _ = O.add_errors(c, rng.below(code.tau + 1), rng, code.field)
            st = Gp.goppa_run(code, v) if code.in_subfield(c) else None
            generic = D.decode(cd, v)
            assert generic == c
            if st is not None:
                assert st.output == generic


def test_build_errors():
    F = field_of_order(8)
    pts = Gp.all_points(F)
    with pytest.raises(Gp.GoppaBuildError, match="repeated"):
        Gp.goppa_build(2, 3, [1, 1, 2, 3], [1, 1, 1])
    with pytest.raises(Gp.GoppaBuildError, match="root"):
        Gp.goppa_build(2, 3, pts, [0, 1])            # g = x vanishes at 0
    with pytest.raises(Gp.GoppaBuildError, match="smaller than n"):
        Gp.goppa_build(2, 3, [1, 2, 3], [1, 1, 1, 1])
    with pytest.raises(Gp.GoppaBuildError, match="separable"):
        Gp.binary_goppa_build(3, pts[1:], [1, 0, 1])  # (x + 1)^2


def test_description_round_trip(goppa825):
    doc = goppa825.to_description()
    assert doc == {"kind": "goppa", "q": 2, "m": 3, "prim": [1, 1, 0, 1],
                   "L": list(goppa825.L), "g": [1, 1, 1], "squared": True}
    back = Gp.from_description(doc)
    assert back.h == goppa825.h and back.gpoly == goppa825.gpoly
    with pytest.raises(Gp.GoppaBuildError):
        Gp.from_description({"q": 2})


def test_parse_L():
    F = field_of_order(8)
    assert Gp.parse_L("all", F) == [0, 1, 2, 4, 3, 6, 7, 5]
    assert Gp.parse_L("1,2, 3", F) == [1, 2, 3]
