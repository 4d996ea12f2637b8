import pytest

from diffag import analysis as A, decoder as D, oracle as O
from diffag.hermitian import build_hermitian


def test_splitmix_reference_values():
    assert O.SplitMix64(0).next() == 0xE220A8397B1DCDAF
    r = O.SplitMix64(1234567)
    assert [r.next(), r.next()] == [6457827717110365317, 3203168211198807973]


def test_below_range_and_width():
    r = O.SplitMix64(9)
    draws = [r.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    with pytest.raises(ValueError):
        r.below(0)


def test_add_errors_contract(herm3):
    F = herm3.field
    c = O.encode(herm3, [0] * 11)
    v, e = O.add_errors(c, 0, 5, F)
    assert v == c and not any(e)
    v1, e1 = O.add_errors(c, 6, 42, F)
    v2, e2 = O.add_errors(c, 6, 42, F)
    assert (v1, e1) == (v2, e2)
    assert O.weight(e1) == 6
    assert v1 == [F.add(a, b) for a, b in zip(c, e1)]
    with pytest.raises(O.OracleError):
        O.add_errors(c, 27, 1, F)


def test_full_weight_binary_flips_everything(goppa825):
    c = O.encode(goppa825, [1, 0])
    v, e = O.add_errors(c, 8, 3, goppa825.field, [1])
    assert e == [1] * 8
    assert v == [a ^ 1 for a in c]


def test_encode(herm3):
    assert O.encode(herm3, [0] * 11) == [0] * 26
    unit = {s: int(s == -13) for s in herm3.S}
    assert O.encode(herm3, unit) == [2] * 26
    with pytest.raises(O.OracleError):
        O.encode(herm3, {0: 1})
    with pytest.raises(O.OracleError):
        O.encode(herm3, [0] * 10)
    with pytest.raises(O.OracleError):
        O.encode(herm3, [9] + [0] * 10)


def test_round_trip(herm3):
    for seed in range(20):
        msg = O.random_message(herm3, seed)
        c = O.encode(herm3, msg)
        assert D.decode(herm3, c) == c


def test_min_distance(goppa825, herm2):
    assert O.min_distance_exhaustive(goppa825) == 5
    assert O.min_distance_exhaustive(herm2) >= A.d_omega_tau(herm2)[0]


def test_min_distance_single_row():
    code = build_hermitian(2, 0, 6)
    assert code.k == 1
    assert O.min_distance_exhaustive(code) == O.weight(code.gen[0])


def test_size_guard(herm3):
    with pytest.raises(O.OracleError, match="messages"):
        O.min_distance_exhaustive(herm3)
    with pytest.raises(O.OracleError):
        O.nearest_codeword(herm3, [0] * 26)


def test_nearest_codeword(goppa825, herm2):
    c = O.encode(goppa825, [1, 1])
    assert O.nearest_codeword(goppa825, c) == c
    out = O.nearest_codeword(goppa825, [1, 1, 1, 1, 1, 1, 1, 0])
    assert out == [1, 1, 1, 1, 0, 1, 0, 0]
    assert O.distance(out, [1, 1, 1, 1, 1, 1, 1, 0]) == 2


def test_nearest_codeword_tie_break(herm2):
    # the first closest codeword in message order wins
    words = [cw for _, cw in O.codewords(herm2)]
    v = [1] * herm2.n
    best = min(O.distance(w, v) for w in words)
    first = next(w for w in words if O.distance(w, v) == best)
    assert O.nearest_codeword(herm2, v) == first
