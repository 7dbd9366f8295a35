"""Tests for monomial matrices over a finite group."""

import pytest

from app.config import DeskBounds, get_bounds, set_bounds
from app.errors import BoundExceededError, GroupMismatchError, SizeMismatchError, VGAlgError
from app.groups import builtin_group
from app.monomial import (
    MonomialMatrix,
    adjacent,
    compose,
    cycle,
    cycle_type,
    enumerate_elements,
    eps,
    factorize,
    format_monomial,
    from_permutation,
    gamma_order,
    identity,
    label,
    omega_order,
    parse_monomial,
    shift,
    star,
    transposition,
    truncate,
    zero,
)


@pytest.fixture
def z2():
    return builtin_group("Z2")


@pytest.fixture
def restore_bounds():
    saved = get_bounds()
    yield
    set_bounds(saved)


def test_transposition_is_an_involution():
    """(1,2)·(1,2) is the identity."""
    t = transposition(1, 2, 2)
    assert compose(t, t) == identity(2)


def test_eps_times_transposition():
    """eps_1·(1,2) keeps only column 1 mapped to row 2."""
    product = compose(eps([1], 2), transposition(1, 2, 2))

    assert product.cols == ((1, 0), None)
    assert product.rank == 1


def test_label_squared(z2):
    """The nontrivial label of Z2 squares to the identity."""
    g = label(1, 1, 1, z2)
    assert compose(g, g) == identity(1, z2)


def test_degree():
    """Degree counts diagonal entries different from 1."""
    assert identity(5).degree == 0
    assert transposition(1, 2, 5).degree == 2
    assert eps([1], 3).degree == 1
    assert zero(3).degree == 3


def test_truncate():
    """Truncation extracts the upper-left corner."""
    assert truncate(identity(3), 2) == identity(2)
    assert truncate(transposition(1, 2, 2), 1) == eps([1], 1)
    assert truncate(transposition(1, 3, 3), 2) == eps([1], 2)


def test_truncate_out_of_range():
    """Truncating beyond the size is an error."""
    with pytest.raises(VGAlgError):
        truncate(identity(2), 3)


def test_shift():
    """The shift moves every index up by one and fixes the new point 1."""
    assert shift(transposition(1, 2, 2)) == transposition(2, 3, 3)
    assert shift(eps([1], 1)) == eps([2], 2)
    assert shift(identity(4)) == identity(5)


def test_shift_is_multiplicative():
    """xi(a·b) = xi(a)·xi(b)."""
    a = compose(cycle((1, 3, 2), 3), eps([2], 3))
    b = transposition(1, 3, 3)
    assert shift(compose(a, b)) == compose(shift(a), shift(b))


def test_enumeration_counts():
    """|Gamma(2)| = 7, |Gamma(3)| = 34, |Omega(2,3)| = 6."""
    assert len(list(enumerate_elements("Gamma", 2))) == 7
    assert len(list(enumerate_elements("Gamma", 3))) == 34
    assert len(list(enumerate_elements("Omega", 3, ell=2))) == 6
    assert gamma_order(3) == 34
    assert omega_order(2, 3) == 6


def test_enumeration_is_duplicate_free(z2):
    """Enumerating Gamma(2, Z2) gives gamma_order distinct elements."""
    elements = list(enumerate_elements("Gamma", 2, z2))

    assert len(elements) == gamma_order(2, z2) == 17
    assert len(set(elements)) == len(elements)


def test_units_of_wreath(z2):
    """G(2) for Z2 has 2!·2^2 elements."""
    assert len(list(enumerate_elements("G", 2, z2))) == 8


def test_enumeration_bound(restore_bounds):
    """Requests past the configured bounds are refused."""
    set_bounds(DeskBounds(max_sym_n=4))

    with pytest.raises(BoundExceededError, match="max_sym_n"):
        enumerate_elements("S", 5)


def test_omega_needs_ell():
    """Omega requires 0 <= l <= n."""
    with pytest.raises(VGAlgError):
        enumerate_elements("Omega", 2)


def test_star_is_an_inverse(z2):
    """a·a*·a = a on every element of Gamma(2, Z2)."""
    for a in enumerate_elements("Gamma", 2, z2):
        assert star(star(a)) == a
        assert compose(compose(a, star(a)), a) == a


def test_star_reverses_products(z2):
    """(a·b)* = b*·a*."""
    a = compose(label(1, 1, 3, z2), cycle((1, 2, 3), 3, z2))
    b = compose(eps([3], 3, z2), adjacent(2, 3, z2))
    assert star(compose(a, b)) == compose(star(b), star(a))


def test_factorization_rebuilds_the_element(z2):
    """d·w·eps_I recovers every element of Gamma(2, Z2)."""
    for a in enumerate_elements("Gamma", 2, z2):
        fac = factorize(a)
        d = MonomialMatrix(2, tuple((j, fac.labels.get(j, 0)) for j in range(2)), z2)
        w = from_permutation(fac.perm, z2)
        rebuilt = compose(compose(d, w), eps([j + 1 for j in fac.killed], 2, z2))
        assert rebuilt == a


def test_format_and_parse(z2):
    """Text forms print canonically and parse back."""
    x = compose(eps([1], 2), transposition(1, 2, 2))
    assert format_monomial(x) == "(1,2) eps{2}"
    assert parse_monomial("(1,2) eps{2}", 2) == x

    assert format_monomial(identity(3)) == "1"
    assert parse_monomial("1", 3) == identity(3)

    g = label(1, 2, 3, z2)
    assert format_monomial(g) == "[g1@2]"
    assert parse_monomial("[g1@2]", 3, z2) == g


def test_parse_rejects_garbage():
    """Unknown tokens are reported with their offset."""
    with pytest.raises(VGAlgError, match="offset"):
        parse_monomial("(1,2) foo", 3)


def test_cycle_type():
    """Cycle types include fixed points."""
    assert cycle_type((1, 2, 0, 3)) == (3, 1)
    assert cycle_type((0, 1)) == (1, 1)


def test_invalid_cycle():
    """Cycles must use distinct points inside 1..n."""
    with pytest.raises(VGAlgError):
        cycle((1, 4), 3)


def test_size_mismatch():
    """Composing elements of different sizes fails."""
    with pytest.raises(SizeMismatchError):
        compose(identity(2), identity(3))


def test_group_mismatch(z2):
    """Composing elements labelled by different groups fails."""
    with pytest.raises(GroupMismatchError):
        compose(identity(2, z2), identity(2))


def test_from_cols_rejects_repeated_rows():
    """A row may carry at most one nonzero entry."""
    with pytest.raises(VGAlgError, match="row 1"):
        MonomialMatrix.from_cols([(0, 0), (0, 0)])
