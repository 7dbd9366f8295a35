"""Tests for the verification suites behind the commands."""

import pytest

from app.errors import ConfigError, PartitionError
from app.groups import builtin_group
from app.monomial import cycle_type
from app.partitions import EMPTY, Multipartition, Partition
from app.suites import (
    charval,
    class_representative,
    delta_table,
    dim_identity,
    eigentable,
    rook_branching,
    spectrum,
    sstar_table,
    verify_central,
    verify_relations,
    wreath_spectrum,
)


@pytest.fixture
def z2():
    return builtin_group("Z2")


def test_class_representative():
    """Cycles sit on consecutive points."""
    rep = class_representative(Partition([3, 1]))
    assert cycle_type([row for row, _ in rep.cols]) == (3, 1)


def test_eigentable():
    """Class sums act by p#_k on all of S(4)."""
    result = eigentable(4)

    assert result.passed
    assert len(result.rows) == 5 * 4
    assert all(row["match"] for row in result.rows)


def test_eigentable_single_k():
    result = eigentable(5, 3)

    assert result.passed
    assert {row["k"] for row in result.rows} == {3}
    row = next(r for r in result.rows if r["lambda"] == "[5]")
    assert row["eigenvalue"] == row["psharp"] == "60"


def test_eigentable_wreath(z2):
    result = eigentable(2, group=z2)
    assert result.passed


def test_eigentable_single_character(z2):
    result = eigentable(2, 1, z2, psi=1)

    assert result.passed
    assert {row["psi"] for row in result.rows} == {1}


@pytest.mark.parametrize("group_name, psi", [("trivial", 0), ("Z2", 2)])
def test_eigentable_rejects_bad_character(group_name, psi):
    with pytest.raises(ConfigError):
        eigentable(2, 1, builtin_group(group_name), psi=psi)


def test_delta_table():
    """Delta^(k)_3 acts on T^λ_3 by p#_k(λ) for every |λ| <= 3."""
    result = delta_table(3)

    assert result.passed
    assert {row["lambda"] for row in result.rows} >= {"[]", "[1]", "[2,1]", "[1,1,1]"}


def test_delta_table_wreath(z2):
    """Character and identity class functions over Z2."""
    result = delta_table(2, 1, z2)

    assert result.passed
    assert {row["phi"] for row in result.rows} == {"chi0", "chi1", "id"}


def test_verify_relations():
    result = verify_relations(3)

    assert result.passed
    assert {row["family"] for row in result.rows} == {"rook", "hecke"}


def test_verify_relations_wreath(z2):
    assert verify_relations(2, z2).passed


def test_verify_central():
    result = verify_central(3)

    assert result.passed
    checks = {row["check"] for row in result.rows}
    assert {"truncation", "shift", "degree", "label/eps_bar"} <= checks


def test_dim_identity():
    """Both sides count the 34 elements of Gamma(3)."""
    result = dim_identity(3)

    assert result.passed
    assert result.extra["left"] == result.extra["right"] == 34
    assert result.extra["enumerated"] == 34


def test_dim_identity_wreath(z2):
    result = dim_identity(2, z2)

    assert result.passed
    assert result.extra["enumerated"] == result.extra["right"]


def test_spectrum():
    """T^(1)_3 restricts to S(3) as (3) + (2,1)."""
    result = spectrum(Partition([1]), 3)

    assert result.passed
    mult = {row["index"]: row["value"] for row in result.rows if row["kind"] == "multiplicity"}
    assert mult == {"[3]": "1", "[2,1]": "1", "[1,1,1]": "0"}
    assert result.extra["bracket"] == "[2,1]"
    assert result.extra["dimension_ratio"] == "2/3"


def test_spectrum_of_empty_diagram():
    """T^∅_n is the trivial representation."""
    result = spectrum(EMPTY, 3)

    assert result.passed
    assert result.extra["bracket"] == "[3]"


def test_wreath_spectrum(z2):
    blam = Multipartition.from_mapping(z2, {1: [1]})
    assert wreath_spectrum(blam, 2).passed


def test_rook_branching():
    result = rook_branching(Partition([2, 1]), 4)

    assert result.passed
    assert result.extra["dim_left"] == result.extra["dim_right"]


def test_rook_branching_wreath(z2):
    blam = Multipartition.from_mapping(z2, {0: [1], 1: [1]})
    assert rook_branching(blam, 3).passed


@pytest.mark.parametrize("lam, n", [(EMPTY, 3), (Partition([2, 1]), 3)])
def test_rook_branching_needs_room(lam, n):
    with pytest.raises(PartitionError):
        rook_branching(lam, n)


def test_sstar_table():
    result = sstar_table(3)

    assert result.passed
    row = next(r for r in result.rows if r["lambda"] == "[2,1]" and r["nu"] == "[2,1]")
    assert row["value"] == "3"


def test_charval():
    """Murnaghan-Nakayama values agree with the seminormal traces."""
    result = charval(Partition([3, 2]))

    assert result.passed
    assert all("trace" in row for row in result.rows)
    row = next(r for r in result.rows if r["rho"] == "[1,1,1,1,1]")
    assert row["value"] == 5


def test_charval_selected_classes():
    result = charval(Partition([2, 1]), [Partition([3])])
    assert [row["value"] for row in result.rows] == [-1]
