import pytest
from hypothesis import given, strategies as st

from crystals.cartan import (
    DecompositionError,
    UnsupportedTypeError,
    root_system,
)

a1 = root_system("A", 1)
a2 = root_system("A", 2)
a3 = root_system("A", 3)
b2 = root_system("B", 2)
d4 = root_system("D", 4)


def test_pairing():
    assert a2.pairing((1, 0), 1) == 1
    assert a2.pairing((0, 0), 2) == 0
    assert a2.pairing((-1, 1), 1) == -1


def test_simple_reflection():
    assert a2.simple_reflection(1, (1, 0)) == (-1, 1)
    assert a2.simple_reflection(2, (1, 0)) == (1, 0)
    assert a1.simple_reflection(1, (1,)) == (-1,)


def test_dom_w():
    assert a2.dom_w((0, -1)) == (1, 0)
    assert a2.dom_w((1, 1)) == (1, 1)
    assert a2.dom_w((1, -1)) == (0, 1)


def test_weyl_orbit():
    assert a2.weyl_orbit((1, 0)) == {(1, 0), (-1, 1), (0, -1)}
    assert a1.weyl_orbit((0,)) == {(0,)}
    assert len(a3.weyl_orbit((1, 0, 0))) == 4


def test_is_minuscule():
    assert a2.is_minuscule((1, 0))
    assert not b2.is_minuscule((1, 0))
    assert b2.is_quasi_minuscule((1, 0))
    assert a2.is_minuscule((0, 0))
    assert b2.is_minuscule((0, 1))


def test_longest_element_word():
    assert a1.longest_element_word() == (1,)
    assert len(a2.longest_element_word()) == 3
    assert len(b2.longest_element_word()) == 4


def test_apply_w0():
    assert a2.apply_w0((1, 0)) == (0, -1)
    assert a1.apply_w0((1,)) == (-1,)
    assert a2.apply_w0((1, 1)) == (-1, -1)


def test_star():
    assert a2.star(1) == 2
    assert a1.star(1) == 1
    assert d4.star(1) == 1


def test_star_exceptional():
    e6 = root_system("E", 6)
    assert e6.star(1) == 6
    assert e6.minuscule_fundamentals() == (
        (1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1),
    )
    e7 = root_system("E", 7)
    assert e7.minuscule_fundamentals() == ((0, 0, 0, 0, 0, 0, 1),)


def test_minuscule_decomposition():
    assert a2.minuscule_decomposition((1, 1)).parts == ((1, 0), (1, 0), (-1, 1))
    assert a2.minuscule_decomposition((2, 0)).parts == ((1, 0), (1, 0))
    parts = b2.minuscule_decomposition((1, 0)).parts
    assert len(parts) == 2
    spin_orbit = b2.weyl_orbit((0, 1))
    assert all(p in spin_orbit for p in parts)
    assert tuple(sum(c) for c in zip(*parts)) == (1, 0)
    assert b2.is_dominant(parts[0])


def test_minuscule_decomposition_zero():
    assert a2.minuscule_decomposition((0, 0)).parts == ()


def test_minuscule_decomposition_partial_sums_dominant():
    for lam in [(2, 1), (0, 3), (1, 2)]:
        parts = a2.minuscule_decomposition(lam).parts
        run = a2.zero()
        for p in parts:
            run = tuple(a + b for a, b in zip(run, p))
            assert a2.is_dominant(run)
        assert run == lam


def test_unsupported_type():
    with pytest.raises(UnsupportedTypeError):
        root_system("E", 8)
    with pytest.raises(UnsupportedTypeError):
        root_system("F", 4)
    with pytest.raises(UnsupportedTypeError):
        root_system("A", 0)


def test_positive_coroots_count():
    # |positive roots|: A2 -> 3, B2 -> 4, D4 -> 12
    assert len(a2.positive_coroots()) == 3
    assert len(b2.positive_coroots()) == 4
    assert len(d4.positive_coroots()) == 12


small_weight = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@given(small_weight)
def test_dom_w_idempotent_and_in_orbit(w):
    d = a2.dom_w(w)
    assert a2.is_dominant(d)
    assert a2.dom_w(d) == d
    assert w in a2.weyl_orbit(d)


@given(small_weight, st.integers(1, 2))
def test_reflection_involutive(w, i):
    assert a2.simple_reflection(i, a2.simple_reflection(i, w)) == w


@given(small_weight)
def test_w0_involutive(w):
    assert a2.apply_w0(a2.apply_w0(w)) == w


@given(st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_decomposition_reconstructs(lam):
    parts = b2.minuscule_decomposition(lam).parts
    total = b2.zero()
    for p in parts:
        total = tuple(a + b for a, b in zip(total, p))
        assert b2.is_minuscule(b2.dom_w(p))
    assert total == lam
