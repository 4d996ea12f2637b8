import pytest

from diffag.field import field_of_order
from diffag.goppa import all_points, binary_goppa_build, goppa_build
from diffag.hermitian import build_hermitian


@pytest.fixture(scope="session")
def herm3():
    """The [26, 11, 13] code over GF(9) with G = -O + 18Q."""
    return build_hermitian(3, -1, 18)


@pytest.fixture(scope="session")
def herm2():
    """A [7, 2] one-point code over GF(4), G = 5Q."""
    return build_hermitian(2, 0, 5)


@pytest.fixture(scope="session")
def herm2_two_point():
    return build_hermitian(2, -1, 6)


@pytest.fixture(scope="session")
def goppa825():
    """Binary Goppa code on all of GF(8) with g = (x^2 + x + 1)^2."""
    F = field_of_order(8)
    return binary_goppa_build(3, all_points(F), [1, 1, 1])


@pytest.fixture(scope="session")
def goppa_gf8_small():
    """Binary code from g = x + alpha over four elements of GF(8) avoiding its root."""
    F = field_of_order(8)
    a = F.alpha
    L = [x for x in all_points(F) if x != a][:4]
    return binary_goppa_build(3, L, [a, 1])


@pytest.fixture(scope="session")
def goppa_gf9():
    """Ternary Goppa code over GF(9); g = x^2 + x + alpha has no roots in GF(9)."""
    F = field_of_order(9)
    L = [x for x in all_points(F) if x != 0]
    return goppa_build(3, 2, L, [F.alpha, 1, 1])
