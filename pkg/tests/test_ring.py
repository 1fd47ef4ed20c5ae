import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasihh.ring import (
    ONE,
    SPECIALIZATIONS,
    X,
    Y,
    Z,
    ZERO,
    RingElem,
    is_unit,
    lam,
    specialize,
    unit_ratio,
)


def random_elem(rng, nterms=3, zspan=4):
    terms = {}
    for _ in range(rng.randrange(nterms + 1)):
        key = (rng.randrange(2), rng.randrange(2), rng.randrange(-zspan, zspan + 1))
        terms[key] = rng.randrange(-9, 10)
    return RingElem(terms)


def test_x_squared_is_one():
    assert X * X == ONE
    assert Y * Y == ONE
    assert Z * Z.inverse() == ONE


def test_identity_cases():
    assert ONE * (Y * Z) == Y * Z
    assert ZERO + X == X


def test_difference_of_squares_collapses():
    # (X + Y)(X - Y) = X^2 - XY + XY - Y^2 = 0 by hand
    assert (X + Y) * (X - Y) == ZERO


def test_ring_axioms_fuzzed():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (random_elem(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_is_unit():
    assert is_unit(-X * Z ** 3)
    assert is_unit(Z.inverse())
    assert not is_unit(X + Y)
    assert not is_unit(2 * X)
    assert not is_unit(ZERO)


def test_nonunit_exhaustive_oracle():
    # oracle: X + Y is a unit iff some candidate u with u*(X+Y) = 1 exists
    # among +-X^a Y^b Z^k over a bounded window
    candidates = [
        s * RingElem.monomial(a, b, k)
        for s in (1, -1)
        for a in (0, 1)
        for b in (0, 1)
        for k in range(-6, 7)
    ]
    assert not any(u * (X + Y) == ONE for u in candidates)


def test_unit_ratio():
    # monomial division: (X Z) / Z = X
    assert unit_ratio(X * Z, Z) == X
    assert unit_ratio(X, ZERO) is None
    assert unit_ratio(X, X + Y) is None
    assert unit_ratio(2 * X, X) is None


def test_lambda_formula():
    assert lam((1, 0), (0, 1)) == Z
    assert lam((0, 0), (5, -3)) == ONE
    assert lam((1, 1), (1, 1)) == X * Y


def test_lambda_inverse_and_bilinear():
    rng = random.Random(11)
    for _ in range(100):
        x = (rng.randrange(-5, 6), rng.randrange(-5, 6))
        y = (rng.randrange(-5, 6), rng.randrange(-5, 6))
        z = (rng.randrange(-5, 6), rng.randrange(-5, 6))
        assert lam(x, y) * lam(y, x) == ONE
        assert lam(x, (y[0] + z[0], y[1] + z[1])) == lam(x, y) * lam(x, z)
        assert lam((x[0] + y[0], x[1] + y[1]), z) == lam(x, z) * lam(y, z)


def test_specialize_values():
    assert specialize(X * Z, 1, -1, 1) == 1
    assert specialize(Y * Z, 1, -1, 1) == -1
    assert specialize(X + Y, 1, 1, 1) == 2
    assert SPECIALIZATIONS["even"] == (1, 1, 1)
    assert SPECIALIZATIONS["odd"] == (1, -1, 1)


def test_specialize_is_ring_hom():
    rng = random.Random(3)
    for _ in range(50):
        a, b = random_elem(rng), random_elem(rng)
        for sx in (1, -1):
            for sy in (1, -1):
                for sz in (1, -1):
                    assert specialize(a * b, sx, sy, sz) == specialize(
                        a, sx, sy, sz
                    ) * specialize(b, sx, sy, sz)
                    assert specialize(a + b, sx, sy, sz) == specialize(
                        a, sx, sy, sz
                    ) + specialize(b, sx, sy, sz)


@given(
    st.dictionaries(
        st.tuples(
            st.integers(0, 1), st.integers(0, 1), st.integers(-4, 4)
        ),
        st.integers(-20, 20),
        max_size=5,
    )
)
@settings(max_examples=200)
def test_serialization_roundtrip(terms):
    a = RingElem(terms)
    assert RingElem.from_terms(a.to_terms()) == a
    quads = a.to_terms()
    assert quads == sorted(quads)
    assert all(c != 0 for _, _, _, c in quads)


def test_serialization_example():
    assert (X * Z).to_terms() == [[1, 0, 1, 1]]


def test_inverse_errors():
    with pytest.raises(ValueError):
        (X + Y).inverse()
