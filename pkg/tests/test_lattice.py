"""Ring laws, residue structure and digit decomposition of the lattice."""

import random

from hypothesis import given, strategies as st

from gosper.lattice import (
    CENTER_STEP,
    DIGITS,
    GAMMA,
    OMEGA,
    ONE,
    ZERO,
    Eisenstein,
    color_class,
    div_exact,
    divides,
    product,
    split_digit,
)

points = st.builds(
    Eisenstein,
    st.integers(min_value=-10**9, max_value=10**9),
    st.integers(min_value=-10**9, max_value=10**9),
)


@given(points, points, points)
def test_ring_laws(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x
    assert x * ONE == x
    assert x + (-x) == ZERO


@given(points, points)
def test_norm_and_conjugate(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * x.conj()) == Eisenstein(x.norm(), 0)
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.norm() >= 0


@given(points)
def test_omega_rotation(x):
    # six pi/3 rotations return to the start; w**2 = w - 1
    assert x.rot(6) == x
    assert product(OMEGA[1] for _ in range(6)) == ONE
    assert OMEGA[1] * OMEGA[1] == OMEGA[1] - ONE
    assert x.rot(3) == -x


@given(points, points)
def test_color_class_homomorphism(x, y):
    assert color_class(x * y) == (color_class(x) * color_class(y)) % 3
    assert color_class(x + y) == (color_class(x) + color_class(y)) % 3


def test_color_class_constants():
    assert color_class(ZERO) == 0
    assert color_class(ONE) == 1  # W vertex
    assert color_class(CENTER_STEP) == 0  # adjacent hexagon center
    assert {color_class(u) for u in OMEGA} == {1, 2}


def test_gamma_constants():
    assert GAMMA["+"].norm() == 7
    assert GAMMA["-"].norm() == 7
    assert GAMMA["-"] == GAMMA["+"].conj()  # mirror pair
    assert CENTER_STEP.norm() == 3


def test_digit_round_trip_bulk():
    rng = random.Random(12345)
    for _ in range(10_000):
        z = Eisenstein(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        for chi in "+-":
            q, d = split_digit(z, chi)
            assert d in DIGITS
            assert GAMMA[chi] * q + d == z


@given(points)
def test_digit_decomposition_terminates(z):
    for chi in "+-":
        cur = z
        digits = []
        for _ in range(200):
            if cur == ZERO:
                break
            cur, d = split_digit(cur, chi)
            digits.append(d)
        assert cur == ZERO
        # reconstruct
        acc = ZERO
        for d in reversed(digits):
            acc = acc * GAMMA[chi] + d
        assert acc == z


@given(points, points)
def test_divides_and_div_exact(x, d):
    if d == ZERO:
        return
    z = x * d
    assert divides(d, z)
    assert div_exact(z, d) == x
    if not divides(d, z + ONE):
        try:
            div_exact(z + ONE, d)
            raised = False
        except ValueError:
            raised = True
        assert raised
