"""Tests for the distinguished element families."""

from fractions import Fraction

import pytest

from app.algebra import AlgebraElement, CentralizerSpec, eps_bar_product, is_in_centralizer
from app.central import (
    build_alpha,
    build_delta,
    build_u,
    build_z,
    build_z_psi,
    class_inner_product,
    delta_eigenvalue,
    labelled_cycle,
    lift,
    parse_family,
    phi_for_character,
    phi_identity,
)
from app.errors import ParseError, VGAlgError
from app.groups import builtin_group
from app.monomial import compose, eps, identity, label, transposition, zero
from app.partitions import Multipartition, Partition, multipartitions_of
from app.reps import build_wreath
from app.shifted import frakp, hstar, psharp, q


@pytest.fixture
def z2():
    return builtin_group("Z2")


def test_build_z():
    """z^(1)_4 = 4, z^(2)_3 = 2 sum of transpositions, z^(3)_2 = 0."""
    assert build_z(1, 4) == AlgebraElement.scalar(4, 4)
    expected = AlgebraElement(
        3, {transposition(1, 2, 3): 2, transposition(1, 3, 3): 2, transposition(2, 3, 3): 2}
    )
    assert build_z(2, 3) == expected
    assert build_z(3, 2).is_zero


def test_build_z_psi(z2):
    """For Z2, z^(1,psi)_1 is the character idempotent (e ± g)/2."""
    e = identity(1, z2)
    g = label(1, 1, 1, z2)
    assert build_z_psi(1, 1, 1, z2) == AlgebraElement(1, {e: Fraction(1, 2), g: Fraction(-1, 2)}, z2)
    assert build_z_psi(1, 0, 1, z2) == AlgebraElement(1, {e: Fraction(1, 2), g: Fraction(1, 2)}, z2)


def test_build_z_psi_trivial_group():
    """Over the trivial group z^(k,0) is z^(k)."""
    trivial = builtin_group("trivial")
    assert build_z_psi(2, 0, 3, trivial) == build_z(2, 3)


def test_build_delta():
    """Delta^(1)_3 = 3 - eps_1 - eps_2 - eps_3; Delta^(3)_2 = 0."""
    expected = AlgebraElement(
        3, {identity(3): 3, eps([1], 3): -1, eps([2], 3): -1, eps([3], 3): -1}
    )
    assert build_delta(1, 3) == expected
    assert build_delta(3, 2).is_zero


def test_build_delta_two():
    """Delta^(2)_2 = 2(1,2)(1-eps_1)(1-eps_2), four terms."""
    t = transposition(1, 2, 2)
    expected = AlgebraElement(
        2,
        {
            t: 2,
            compose(t, eps([1], 2)): -2,
            compose(t, eps([2], 2)): -2,
            compose(t, eps([1, 2], 2)): 2,
        },
    )
    assert build_delta(2, 2) == expected
    assert len(build_delta(2, 2)) == 4


def test_delta_needs_class_function_over_nontrivial_group(z2):
    with pytest.raises(VGAlgError, match="class function"):
        build_delta(1, 2, z2)


@pytest.mark.parametrize("k, n", [(1, 3), (2, 3), (3, 3), (2, 4)])
def test_delta_is_central(k, n):
    """Delta^(k)_n commutes with Gamma(n)."""
    assert is_in_centralizer(build_delta(k, n), CentralizerSpec(m=0))


def test_delta_truncates_consistently():
    """theta_{n-1}(Delta^(2)_n) = Delta^(2)_{n-1}."""
    assert build_delta(2, 4).truncate(3) == build_delta(2, 3)


def test_build_u():
    """u_{1|2} = (1,2) eps_bar_1 eps_bar_2; u_{2|2} = 0."""
    expected = AlgebraElement.of(transposition(1, 2, 2)) * eps_bar_product([1, 2], 2)
    assert build_u(1, 2) == expected
    assert build_u(2, 2).is_zero


def test_build_u_wreath(z2):
    """Over Z2, u_{1|2} sums the two labelled transpositions."""
    swaps = AlgebraElement(
        2, {labelled_cycle((1, 2), (g, z2.inv[g]), 2, z2): 1 for g in range(2)}, z2
    )
    assert build_u(1, 2, z2) == swaps * eps_bar_product([1, 2], 2, z2)
    assert build_u(1, 2, z2).coefficient(zero(2, z2)) == 2


def test_shift_identity():
    """2u_1 = Delta^(2)_n - xi(Delta^(2)_{n-1})."""
    n = 4
    lhs = build_u(1, n).scale(2)
    rhs = build_delta(2, n) - build_delta(2, n - 1).shift()
    assert lhs == rhs


def test_lift():
    """c_n(p#_2) = z^(2)_n, c_n(q_1) = n and c_n(h*_1) = 2n."""
    assert lift(psharp(2), 3) == build_z(2, 3)
    assert lift(q(1), 5) == AlgebraElement.scalar(5, 5)
    assert lift(hstar(1), 4) == AlgebraElement.scalar(8, 4)


def test_lift_wreath_eigenvalues(z2):
    """c_n(f) acts on pi^bλ by f(bλ) over Z2."""
    f = psharp(1, 0) * psharp(1, 1) + frakp(2, 0) - psharp(2, 1).scale(2)
    x = lift(f, 2, z2)
    for blam in multipartitions_of(2, z2):
        assert build_wreath(blam).central_eigenvalue(x) == f.evaluate(blam)


def test_alpha_is_central():
    """alpha_{k,n} lies in the center of Q[S(n)]."""
    assert is_in_centralizer(build_alpha(1, 4), CentralizerSpec(m=0, flavor="group"))


def test_class_functions(z2):
    """phi for a character has inner product (dim/|G|)^k with it."""
    phi = phi_for_character(z2, 1, 2)
    assert phi == [Fraction(1, 4), Fraction(-1, 4)]
    assert class_inner_product(z2, phi, 1) == Fraction(1, 4)
    assert class_inner_product(z2, phi, 0) == 0
    assert phi_identity(z2) == [Fraction(1), Fraction(0)]


def test_delta_eigenvalue(z2):
    """The identity indicator weighs every character by |G|^k/dim^k <phi, psi>."""
    blam = Multipartition.from_mapping(z2, {0: [2], 1: [1]})
    value = delta_eigenvalue(1, phi_identity(z2), blam)
    assert value == 3
    assert delta_eigenvalue(2, [Fraction(1)], Partition([3])) == 6


def test_parse_family():
    """Family literals name their parameters."""
    assert parse_family("z(2)").build(3) == build_z(2, 3)
    assert parse_family("delta(2)").build(3) == build_delta(2, 3)
    assert parse_family("u(1)").build(3) == build_u(1, 3)
    assert parse_family("lift(hstar(1))").build(3) == AlgebraElement.scalar(6, 3)
    assert str(parse_family("delta(2,id)")) == "delta(2,id)"


@pytest.mark.parametrize("text", ["w(2)", "z(x)", "u(1,2)", "z2"])
def test_parse_family_rejects(text):
    with pytest.raises(ParseError):
        parse_family(text)
