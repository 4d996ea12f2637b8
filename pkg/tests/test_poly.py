import pytest
from hypothesis import given, strategies as st

from diffag import poly as P
from diffag.field import field_of_order

F9 = field_of_order(9)
F8 = field_of_order(8)

polys9 = st.lists(st.integers(0, 8), max_size=8).map(lambda c: P.trim(list(c)))


@given(polys9, polys9)
def test_division_identity(f, g):
    if not g:
        with pytest.raises(ZeroDivisionError):
            P.divrem(F9, f, g)
        return
    q, r = P.divrem(F9, f, g)
    assert P.add(F9, P.mul(F9, q, g), r) == f
    assert P.deg(r) < P.deg(g)


@given(polys9, polys9, st.integers(0, 8))
def test_evaluation_is_a_ring_map(f, g, a):
    ev = lambda h: P.evaluate(F9, h, a)
    assert ev(P.mul(F9, f, g)) == F9.mul(ev(f), ev(g))
    assert ev(P.add(F9, f, g)) == F9.add(ev(f), ev(g))


@given(polys9, polys9, st.integers(0, 8), st.integers(0, 4))
def test_addmul(f, g, c, k):
    assert P.addmul(F9, f, c, k, g) == P.add(F9, f, P.shift(P.scale(F9, c, g), k))


@given(polys9, polys9)
def test_gcd_divides_both(f, g):
    d = P.gcd(F9, f, g)
    if not f and not g:
        assert d == []
        return
    assert P.lc(d) == 1
    assert P.divrem(F9, f, d)[1] == []
    assert P.divrem(F9, g, d)[1] == []


def test_from_roots_and_derivative():
    roots = list(range(8))
    f = P.from_roots(F8, roots)
    assert f == [0, 1, 0, 0, 0, 0, 0, 0, 1]     # x^8 + x
    assert P.derivative(F8, f) == [1]
    assert P.derivative(F9, [0, 0, 0, 1]) == []  # (x^3)' = 3x^2 = 0
    assert P.coeff_at(f, -2) == 0 and P.coeff_at(f, 8) == 1


def test_fmt():
    assert P.fmt(F9, []) == "0"
    assert P.fmt(F9, [1, 0, 3]) == "a^1*x^2 + 1"


matrices9 = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.integers(0, 8), min_size=c, max_size=c), min_size=1, max_size=5))


@given(matrices9)
def test_kernel_and_rank(M):
    K = P.kernel(F9, M)
    ncols = len(M[0])
    assert len(K) + P.rank(F9, M) == ncols
    for x in K:
        assert P.matvec(F9, M, x) == [0] * len(M)


@given(matrices9, st.lists(st.integers(0, 8), min_size=5, max_size=5))
def test_solve(M, x):
    x = x[:len(M[0])]
    b = P.matvec(F9, M, x)
    y = P.solve(F9, M, b)
    assert P.matvec(F9, M, y) == b


def test_inverse_and_singular():
    M = [[1, 2], [3, 4]]
    inv = P.inverse(F9, M)
    prod = [[0] * 2 for _ in range(2)]
    for i in range(2):
        for j in range(2):
            acc = 0
            for t in range(2):
                acc = F9.add(acc, F9.mul(M[i][t], inv[t][j]))
            prod[i][j] = acc
    assert prod == P.identity(2)
    with pytest.raises(P.NoSolution):
        P.inverse(F9, [[1, 3], [3, F9.mul(3, 3)]])
    with pytest.raises(P.NoSolution):
        P.solve(F9, [[1, 0], [1, 0]], [1, 2])
