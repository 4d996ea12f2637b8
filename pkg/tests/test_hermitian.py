import time

import pytest

from diffag import poly as P
from diffag.codedata import validate
from diffag.hermitian import (BuildError, build_hermitian, curve_points, eval_function,
                              vanishing_module_basis)


def a_(F, k):
    return F.alpha_pow(k)


def test_golden_parameters(herm3):
    c = herm3
    assert (c.n, c.genus, c.gamma, c.k, c.degG) == (26, 3, 3, 11, 17)
    assert c.a == (0, 4, 8)
    assert c.b == (-9, -5, -13)
    assert c.S == (0, -1, -2, -3, -4, -5, -6, -7, -9, -10, -13)


def test_golden_groebner_basis(herm3):
    x9_x = [0, 2, 0, 0, 0, 0, 0, 0, 0, 1]        # x^9 - x
    x8_1 = [2, 0, 0, 0, 0, 0, 0, 0, 1]           # x^8 - 1
    assert list(herm3.eta[0]) == [x9_x, [], []]
    assert list(herm3.eta[1]) == [[], x8_1, x8_1]
    assert list(herm3.eta[2]) == [[], [], x9_x]


def test_golden_lagrange_differentials(herm3):
    F = herm3.field
    minus_x8_plus_1 = [1, 0, 0, 0, 0, 0, 0, 0, 2]
    assert list(herm3.h[0]) == [[a_(F, 6)] + [0] * 7 + [a_(F, 2)], [], minus_x8_plus_1]
    assert list(herm3.h[1]) == [[a_(F, 2)] + [0] * 7 + [a_(F, 6)], [], minus_x8_plus_1]
    w0, w1, w2 = herm3.h[25]
    # only the displayed coefficients of the last one are checked
    assert (w2[8], w2[7], w2[0]) == (a_(F, 6), a_(F, 3), 1)
    assert (len(w1) - 1, w1[7], w1[6], w1[0]) == (7, a_(F, 6), 2, 1)
    assert (w0[8], w0[7], w0[1], w0[0]) == (a_(F, 3), a_(F, 1), a_(F, 5), 0)


def test_point_order_and_count():
    from diffag.field import field_of_order
    F = field_of_order(9)
    pts = curve_points(F, 3)
    assert len(pts) == 26 and (0, 0) not in pts
    assert pts == sorted(pts)
    for a, b in pts:
        assert F.add(F.pow(b, 3), b) == F.pow(a, 4)


def test_golden_build_is_fast():
    t = time.perf_counter()
    build_hermitian(3, -1, 18)
    assert time.perf_counter() - t < 5


def test_generator_row_of_lowest_monomial_is_constant(herm3):
    # phibar_{-13} = dx / (x^9 - x) has residue 1 / (-1) = 2 everywhere
    assert herm3.gen[-1] == (2,) * 26


def _local_residue(F, q, f, c, pt):
    """res_P of f dx / (y^c (x^{q^2} - x)); x - a is a local parameter at P."""
    a, b = pt
    du = 1
    for beta in F.elements():
        if beta != a:
            du = F.mul(du, F.sub(a, beta))
    return F.div(eval_function(F, f, pt), F.mul(F.pow(b, c), du))


def _order_at_origin(F, q, f, prec=40):
    """Valuation at O of f(x, y), by expanding y as a power series in x."""
    # y^q + y = x^{q+1}: y_k = [x^{q+1}]_k - (y_{k/q})^q
    y = [0] * prec
    for k in range(1, prec):
        rhs = 1 if k == q + 1 else 0
        frob = F.pow(y[k // q], q) if k % q == 0 else 0
        y[k] = F.sub(rhs, frob)
    total = [0] * prec
    ypow = [1] + [0] * (prec - 1)
    for part in f:
        for i, ci in enumerate(part):
            for j, yj in enumerate(ypow):
                if ci and yj and i + j < prec:
                    total[i + j] = F.add(total[i + j], F.mul(ci, yj))
        nxt = [0] * prec
        for i, u in enumerate(ypow):
            for j, v in enumerate(y):
                if u and v and i + j < prec:
                    nxt[i + j] = F.add(nxt[i + j], F.mul(u, v))
        ypow = nxt
    return next((k for k, v in enumerate(total) if v), prec)


@pytest.mark.parametrize("q,gO,gQ", [(3, -1, 18), (3, 2, 10), (3, -5, 22), (2, 1, 3)])
def test_residues_against_local_computation(q, gO, gQ):
    code = build_hermitian(q, gO, gQ)
    F = code.field
    c = max(0, -((gO + 1) // (q + 1)))
    e = gO + 1 + c * (q + 1)
    psi = vanishing_module_basis(F, q, e)
    for f in psi:
        assert _order_at_origin(F, q, f) >= e
    # match each basis function to its position by weight
    wts = [(q + 1) * j for j in range(q)]
    from diffag.codedata import weighted_lead
    for f in psi:
        d = weighted_lead(f, wts, q)[0] + gQ - c * (q + 1) - (q ** 3 + q * (q - 1) - 2)
        i = d % q
        assert code.b[i] == d
        for j in (0, len(code.points) // 2, len(code.points) - 1):
            assert code.base_res[i][j] == _local_residue(F, q, f, c, code.points[j])


@pytest.mark.parametrize("q,gO,gQ", [(2, 0, 5), (2, -1, 6), (2, 2, 3), (3, 0, 12), (3, 4, 9),
                                     (3, -6, 26), (4, 0, 40)])
def test_other_divisors_validate(q, gO, gQ):
    code = build_hermitian(q, gO, gQ)
    validate(code)
    assert code.n == q ** 3 - 1
    # dimension from Riemann-Roch once deg G is large: n + g - 1 - deg G
    if 2 * code.genus - 2 < gO + gQ < code.n:
        assert code.k == code.n + code.genus - 1 - (gO + gQ)
    for hv in code.h:
        assert max(P.deg(p) for p in hv) <= code.N_h
    for e in code.eta:
        assert max(P.deg(p) for p in e) <= code.N_eta


def test_one_point_weights_match_semigroup():
    code = build_hermitian(2, 0, 5)
    assert code.a == (0, 3)
    assert code.b == (0, -1)
    assert code.k == 2


def test_build_errors():
    with pytest.raises(BuildError):
        build_hermitian(2, 0, 9)        # deg G >= n + 2g - 1
    with pytest.raises(Exception):
        build_hermitian(6, 0, 5)
