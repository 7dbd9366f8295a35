"""Tests for the explicit representation models."""

from fractions import Fraction

import numpy as np
import pytest

from app.algebra import AlgebraElement
from app.central import build_delta, build_z, build_z_psi
from app.config import DeskBounds, get_bounds, set_bounds
from app.errors import BoundExceededError, NonScalarError, PartitionError
from app.groups import builtin_group
from app.monomial import (
    adjacent,
    compose,
    cycle,
    enumerate_elements,
    eps,
    identity,
    label,
    transposition,
    zero,
)
from app.partitions import (
    EMPTY,
    Multipartition,
    Partition,
    dim_partition,
    wreath_branch,
    wreath_dim,
)
from app.reps import build_rook, build_sym, build_wreath, eye
from app.shifted import eval_psharp


@pytest.fixture
def z2():
    return builtin_group("Z2")


def same(a, b):
    return a.shape == b.shape and bool((a == b).all())


def test_sym_characters():
    """pi^(2,1) has dimension 2 and characters 2, 0, -1."""
    model = build_sym(Partition([2, 1]), 3)

    assert model.dim == 2
    assert model.trace(identity(3)) == 2
    assert model.trace(transposition(1, 2, 3)) == 0
    assert model.trace(cycle((1, 2, 3), 3)) == -1


def test_sym_trivial_and_sign():
    """(n) is trivial and (1,1) sends s_1 to -1."""
    trivial = build_sym(Partition([3]))
    assert same(trivial.image(adjacent(1, 3)), eye(1, True))
    sign = build_sym(Partition([1, 1]), 2)
    assert sign.image(adjacent(1, 2))[0, 0] == -1


@pytest.mark.parametrize("variant", ["seminormal", "orthogonal"])
def test_sym_is_a_homomorphism(variant):
    """image(a·b) = image(a) image(b) on S(3)."""
    model = build_sym(Partition([2, 1]), 3, variant)
    elements = list(enumerate_elements("S", 3))
    for a in elements:
        for b in elements:
            expected = model.image(a) @ model.image(b)
            assert np.allclose(
                np.array(model.image(compose(a, b)), dtype=float), np.array(expected, dtype=float)
            )


def test_sym_size_mismatch():
    with pytest.raises(PartitionError):
        build_sym(Partition([2, 1]), 4)


def test_apply_algebra():
    """Class sums act by p#: 0 on (2,1) and 6 on (3)."""
    z = build_z(2, 3)
    assert not build_sym(Partition([2, 1])).apply_algebra(z).any()
    assert build_sym(Partition([3])).central_eigenvalue(z) == 6
    assert same(build_sym(Partition([2, 1])).apply_algebra(AlgebraElement.one(3)), eye(2, True))


def test_sym_horner_agrees_with_termwise_sum():
    """The Horner evaluation equals the sum of images."""
    model = build_sym(Partition([2, 2]))
    x = AlgebraElement(
        4, {cycle((1, 2, 3), 4): 2, transposition(2, 4, 4): Fraction(-1, 3), identity(4): 5}
    )
    termwise = sum((model.image(k) * c for k, c in x.items()), np.zeros((2, 2), dtype=object))
    assert same(model.apply_algebra(x), termwise)


def test_non_scalar_eigenvalue():
    """A non-central element has no eigenvalue."""
    with pytest.raises(NonScalarError):
        build_sym(Partition([2, 1])).central_eigenvalue(AlgebraElement.of(transposition(1, 2, 3)))


def test_wreath_sign_character(z2):
    """bλ = {sign: (1)} sends g to -1."""
    model = build_wreath(Multipartition.from_mapping(z2, {1: [1]}), 1)
    assert model.image(label(1, 1, 1, z2))[0, 0] == -1


def test_wreath_two_slots(z2):
    """bλ = {triv: (1), sign: (1)} has dimension 2 and trace 0 on s_1."""
    model = build_wreath(Multipartition.from_mapping(z2, {0: [1], 1: [1]}), 2)

    assert model.dim == 2
    assert model.trace(adjacent(1, 2, z2)) == 0


def test_wreath_trivial(z2):
    """bλ = {triv: (2)} is the trivial representation."""
    model = build_wreath(Multipartition.from_mapping(z2, {0: [2]}), 2)
    for x in enumerate_elements("G", 2, z2):
        assert same(model.image(x), eye(1, True))


def test_wreath_is_a_homomorphism(z2):
    """image(a·b) = image(a) image(b) on Z2 wr S(2)."""
    blam = Multipartition.from_mapping(z2, {0: [1], 1: [1]})
    model = build_wreath(blam)
    elements = list(enumerate_elements("G", 2, z2))
    for a in elements:
        for b in elements:
            assert same(model.image(compose(a, b)), model.image(a).dot(model.image(b)))


def test_wreath_branching(z2):
    """Restricted to G(n-1), pi^bλ is the dim-psi weighted sum over box removals."""
    blam = Multipartition.from_mapping(z2, {0: [2], 1: [1]})
    model = build_wreath(blam)
    parts = [(build_wreath(bmu), d) for bmu, d in wreath_branch(blam)]

    assert model.dim == sum(d * m.dim for m, d in parts)
    for x in enumerate_elements("G", 2, z2):
        assert model.trace(x.embed(3)) == sum(d * m.trace(x) for m, d in parts)


def test_wreath_dimension_matches(z2):
    blam = Multipartition.from_mapping(z2, {0: [2], 1: [1]})
    assert build_wreath(blam).dim == wreath_dim(blam) == 3


@pytest.mark.parametrize("k, psi", [(1, 0), (1, 1), (2, 0)])
def test_wreath_class_sums(z2, k, psi):
    """z^(k,psi)_n acts on pi^bλ by p#_k(bλ(psi))."""
    blam = Multipartition.from_mapping(z2, {0: [2], 1: [1]})
    model = build_wreath(blam)
    expected = eval_psharp(Partition([k]), blam[psi])
    assert model.central_eigenvalue(build_z_psi(k, psi, 3, z2)) == expected


def test_rook_eps_image():
    """On T^(1)_2, eps_1 acts as diag(0, 1)."""
    model = build_rook(Partition([1]), 2)

    assert model.dim == 2
    image = model.image(eps([1], 2))
    assert [[image[i, j] for j in range(2)] for i in range(2)] == [[0, 0], [0, 1]]
    total = model.apply_algebra(AlgebraElement.of(eps([1], 2)) + AlgebraElement.of(eps([2], 2)))
    assert same(total, eye(2, True))


@pytest.mark.parametrize("lam, n", [([1], 3), ([2, 1], 4), ([2], 4), ([], 2)])
def test_rook_dimension(lam, n):
    """dim T^λ_n = C(n, |λ|) dim λ."""
    from math import comb

    lam = Partition(lam)
    assert build_rook(lam, n).dim == comb(n, lam.size) * dim_partition(lam)


def test_rook_image_of_zero():
    """The zero matrix acts as 1 on T^∅ and as 0 otherwise."""
    assert same(build_rook(EMPTY, 2).image(zero(2)), eye(1, True))
    image = build_rook(Partition([1]), 2).image(zero(2))
    assert not image.any()


def test_rook_is_a_homomorphism():
    """image(a·b) = image(a) image(b) on Gamma(3)."""
    model = build_rook(Partition([1]), 3)
    elements = list(enumerate_elements("Gamma", 3))[::5]
    for a in elements:
        for b in elements:
            assert same(model.image(compose(a, b)), model.image(a).dot(model.image(b)))


@pytest.mark.parametrize("lam, k", [([2], 2), ([2, 1], 1), ([1, 1], 2)])
def test_rook_delta_eigenvalues(lam, k):
    """Delta^(k)_n acts on T^λ_n by p#_k(λ)."""
    lam = Partition(lam)
    model = build_rook(lam, 4)
    assert model.central_eigenvalue(build_delta(k, 4)) == eval_psharp(Partition([k]), lam)


def test_rook_compression_ranks():
    """P_r has rank C(r, l) dim λ, and P_N is the identity."""
    assert np.trace(build_rook(Partition([1]), 3).compression(1)) == 1
    assert np.trace(build_rook(Partition([2, 1]), 4).compression(2)) == 0
    model = build_rook(Partition([1]), 3)
    assert same(model.compression(3), eye(3, True))


def test_rook_needs_room():
    with pytest.raises(PartitionError):
        build_rook(Partition([2, 1]), 2)


def test_rook_partition_over_nontrivial_group(z2):
    with pytest.raises(PartitionError):
        build_rook(Partition([1]), 2, z2)


def test_rook_bound():
    """Models above max_rep_dim are refused."""
    saved = get_bounds()
    set_bounds(DeskBounds(max_rep_dim=3))
    try:
        with pytest.raises(BoundExceededError):
            build_rook(Partition([1]), 4)
    finally:
        set_bounds(saved)
