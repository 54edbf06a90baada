import pytest
from hypothesis import given, strategies as st

from crystals.cartan import root_system
from crystals.crystal import (
    TensorElement,
    TensorShape,
    component_members,
    crystal_leq,
    embed_highest,
    empty_element,
    max_elements,
)

a1 = root_system("A", 1)
a2 = root_system("A", 2)

# the three A2 vector-orbit weights
E1, E2, E3 = (1, 0), (-1, 1), (0, -1)


def el(*entries):
    sh = TensorShape(a2, tuple(a2.dom_w(w) for w in entries))
    return TensorElement(sh, entries)


def el1(*entries):
    sh = TensorShape(a1, tuple(a1.dom_w(w) for w in entries))
    return TensorElement(sh, entries)


def test_weight():
    assert el(E1, E1, E2).weight() == (1, 1)
    assert empty_element(a2).weight() == (0, 0)
    assert el(E3, E2).weight() == (-1, 0)


def test_eps_phi():
    assert el(E1).eps(1) == 0 and el(E1).phi(1) == 1
    x = el(E1, E2)
    assert x.eps(1) == 0 and x.phi(1) == 0
    y = el1((-1,), (1,))
    assert y.eps(1) == 1 and y.phi(1) == 1


def test_lower_raise():
    assert el(E1).f(1) == el(E2)
    assert el(E1).f(2) is None
    # the rise terms for (1)x(1) are (2, 1): the unique maximum is at the
    # first factor, so lowering acts there
    assert el1((1,), (1,)).f(1) == el1((-1,), (1,))
    assert el(E2).e(1) == el(E1)


def test_string_data():
    assert el1((-1,), (1,)).string_data(1) == (1, 1)
    assert el(E1, E1).string_data(1) == (0, 2)


def test_is_highest():
    assert el(E1, E1, E2).is_highest()
    assert not el(E2, E1).is_highest()
    assert not el(E1, E3).is_highest()


def test_is_highest_matches_charge_criterion():
    sh = TensorShape(a2, ((1, 0),) * 3)
    for x in component_members(TensorElement(sh, (E1, E1, E1))):
        assert x.is_highest() == x.is_highest_by_charge()


def test_to_highest():
    top = el(E1, E1, E2)
    assert top.to_highest() == (top, ())
    assert el(E2, E1).to_highest() == (el(E1, E1), (1,))
    h, path = el(E3, E2).to_highest()
    assert h == el(E1, E1)
    assert len(path) == 3


def test_component_lowest():
    assert el(E1, E1, E2).component_lowest() == el(E3, E2, E3)
    low = el(E1, E1).component_lowest()
    assert low == el(E3, E3)
    assert low.weight() == a2.apply_w0((2, 0))
    assert el1((1,)).component_lowest() == el1((-1,))


def test_lusztig_involution():
    assert el(E1, E1, E2).lusztig_involution() == el(E3, E2, E3)
    assert el(E3, E2).lusztig_involution() == el(E2, E1)
    # highest goes to lowest
    top = el(E1, E1, E2)
    assert top.lusztig_involution() == top.component_lowest()


def test_lusztig_involution_is_involutive():
    sh = TensorShape(a2, ((1, 0),) * 3)
    for x in component_members(TensorElement(sh, (E1, E1, E2))):
        assert x.lusztig_involution().lusztig_involution() == x


def test_max_elements():
    sh = TensorShape(a2, ((1, 0), (1, 0)))
    assert set(max_elements(sh)) == {el(E1, E1), el(E1, E2)}
    sh1 = TensorShape(a1, ((1,),))
    assert list(max_elements(sh1)) == [el1((1,))]


def test_max_elements_golden_shape():
    shp, bp = embed_highest(a2, (1, 1))
    shq, _ = embed_highest(a2, (2, 0))
    maxima = max_elements(shp.concat(shq))
    target = el(E1, E1, E2, E3, E2)
    assert target in maxima
    assert all(m.is_highest() for m in maxima)


def test_embed_highest():
    sh, high = embed_highest(a2, (1, 1))
    assert sh.factors == ((1, 0), (1, 0), (1, 0))
    assert high == el(E1, E1, E2)
    sh, high = embed_highest(a2, (2, 0))
    assert high == el(E1, E1)
    sh, high = embed_highest(a2, (0, 0))
    assert sh.factors == () and high == empty_element(a2)


def test_component_members_sizes():
    assert len(component_members(el(E1))) == 3
    assert len(component_members(el(E1, E1))) == 6
    assert len(component_members(el(E1, E2))) == 3


def test_crystal_leq():
    assert crystal_leq(el(E2), el(E1))
    assert not crystal_leq(el(E1), el(E2))
    x = el(E1, E2)
    assert crystal_leq(x, x)


@st.composite
def product_element(draw):
    sh = TensorShape(a2, ((1, 0), (0, 1), (1, 0)))
    top = TensorElement(sh, (E1, (0, 1), E1))
    members = sorted(component_members(top), key=lambda m: m.entries)
    return draw(st.sampled_from(members))


@given(product_element(), st.integers(1, 2))
def test_lower_raise_inverse(x, i):
    y = x.f(i)
    if y is not None:
        assert y.e(i) == x
        assert y.weight() == tuple(
            a - b for a, b in zip(x.weight(), a2.simple_root(i))
        )
        assert y.eps(i) == x.eps(i) + 1
        assert y.phi(i) == x.phi(i) - 1
    else:
        assert x.phi(i) == 0


@given(product_element(), st.integers(1, 2))
def test_string_lengths(x, i):
    eps, phi = x.string_data(i)
    assert eps == x.eps(i) and phi == x.phi(i)
    assert phi - eps == x.weight()[i - 1]
    cur, n = x, 0
    while (nxt := cur.e(i)) is not None:
        cur, n = nxt, n + 1
    assert n == eps


@given(product_element())
def test_involution_reverses_strings(x):
    y = x.lusztig_involution()
    for i in (1, 2):
        assert y.eps(a2.star(i)) == x.phi(i)
