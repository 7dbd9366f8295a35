"""Tests for shifted symmetric functions and the p# solver."""

import random
from fractions import Fraction

import pytest

from app.errors import ParseError, PartitionError
from app.groups import builtin_group
from app.partitions import (
    EMPTY,
    Multipartition,
    Partition,
    char_value,
    partitions_of,
    partitions_up_to,
)
from app.shifted import (
    PsharpPolynomial,
    eval_frakp,
    eval_hstar,
    eval_hstar_wreath,
    eval_psharp,
    eval_pstar,
    eval_q,
    eval_sstar,
    express_in_psharp,
    frakp_combination,
    hstar,
    parse_shifted,
    psharp,
    q,
)


def test_pstar_degree_one_is_the_size():
    """p*_{1,sigma}(lam) = |lam| for every sigma."""
    lam = Partition([4, 2, 1])
    for sigma in (0, 1, Fraction(-3, 2), Fraction(1, 3)):
        assert eval_pstar(1, sigma, lam) == 7


def test_q_and_frakp():
    """q_2((1)) = -1 and frakp_1((2,2,1)) = 5."""
    assert eval_q(2, Partition([1])) == -1
    assert eval_frakp(1, Partition([2, 2, 1])) == 5


def test_psharp_values():
    """p#_1 is the size, p#_2 vanishes on (2,1) and is 6 on (3)."""
    for nu in partitions_up_to(4):
        assert eval_psharp(Partition([1]), nu) == nu.size
    assert eval_psharp(Partition([2]), Partition([2, 1])) == 0
    assert eval_psharp(Partition([2]), Partition([3])) == 6


def test_psharp_vanishes_below_its_degree():
    """p#_rho(nu) = 0 when |nu| < |rho|."""
    assert eval_psharp(Partition([3]), Partition([2])) == 0


def test_psharp_needs_nonempty_rho():
    with pytest.raises(PartitionError):
        eval_psharp(EMPTY, Partition([1]))


def test_sstar_values():
    """s*_(1) is the size, s*_(2)((1)) = 0, and s*_lam(lam) is the hook product."""
    for nu in partitions_up_to(3):
        assert eval_sstar(Partition([1]), nu) == nu.size
    assert eval_sstar(Partition([2]), Partition([1])) == 0
    assert eval_sstar(Partition([1, 1]), Partition([1, 1])) == 2
    assert eval_sstar(Partition([2, 1]), Partition([2, 1])) == 3


def test_sstar_vanishing():
    """s*_lam(nu) = 0 unless nu contains lam."""
    lam = Partition([2, 1])
    for nu in partitions_up_to(4):
        value = eval_sstar(lam, nu)
        if nu.contains(lam):
            assert value != 0
        else:
            assert value == 0


def test_hstar_values():
    """h*_1 = 2|lam|, h*_2((1)) = 0, h*_k(empty) = 0."""
    assert eval_hstar(1, Partition([3, 1])) == 8
    assert eval_hstar(2, Partition([1])) == 0
    assert eval_hstar(3, EMPTY) == 0


def test_hstar_wreath_reduces_on_trivial_slot():
    """With only the trivial slot filled it agrees with h*_k."""
    z2 = builtin_group("Z2")
    blam = Multipartition.from_mapping(z2, {0: [2, 1]})
    assert eval_hstar_wreath(2, blam) == eval_hstar(2, Partition([2, 1]))


def test_frakp_combination_empty():
    """For k = 1 and the empty diagram the combination vanishes exactly."""
    for n in (3, 7, 20):
        assert frakp_combination(1, EMPTY, n) == 0


def test_frakp_combination_converges():
    """The combination approaches h*_k(lam) at rate 1/n."""
    lam = Partition([2, 1])
    target = eval_hstar(2, lam)
    errors = [abs(frakp_combination(2, lam, n) - target) for n in (50, 100, 200)]
    assert errors[1] < errors[0]
    assert errors[2] * 200 <= 2 * errors[0] * 50


def test_frakp_combination_needs_room():
    with pytest.raises(PartitionError):
        frakp_combination(1, Partition([2, 1]), 4)


def test_express_q1():
    """q_1 = p#_1."""
    assert express_in_psharp(q(1)) == PsharpPolynomial({(1,): 1})


def test_express_fixed_point():
    """p#_2 expresses as itself."""
    assert express_in_psharp(psharp(2)) == PsharpPolynomial({(2,): 1})


def test_express_hstar():
    """h*_1 = 2 p#_1 and the h*_2 expansion reproduces h*_2 on small diagrams."""
    assert express_in_psharp(hstar(1)) == PsharpPolynomial({(1,): 2})

    poly = express_in_psharp(hstar(2))
    assert poly.terms[(1, 1)] == 1
    for nu in partitions_up_to(4):
        assert poly.evaluate(nu) == eval_hstar(2, nu)


def test_parse_shifted():
    """Literals combine atoms with rational coefficients."""
    f = parse_shifted("2*hstar(2) + psharp([2,1]) - 1/2*pstar(3,1)")
    nu = Partition([3, 1])
    expected = (
        2 * eval_hstar(2, nu)
        + eval_psharp(Partition([2, 1]), nu)
        - Fraction(1, 2) * eval_pstar(3, 1, nu)
    )
    assert f.evaluate(nu) == expected


def test_parse_shifted_constant():
    assert parse_shifted("3/4").evaluate(Partition([1])) == Fraction(3, 4)


def test_parse_shifted_rejects_bad_atoms():
    """Atoms need k >= 1 and nonempty partitions."""
    with pytest.raises(ParseError):
        parse_shifted("hstar(0)")
    with pytest.raises(ParseError):
        parse_shifted("psharp([])")


def test_frakp_splits_off_the_first_row():
    """frakp_k(lam) = lam_1^k + q_k(lam_2, lam_3, ...)."""
    for lam in partitions_up_to(8):
        rest = Partition(tuple(lam)[1:])
        for k in range(1, 7):
            assert eval_frakp(k, lam) == lam.part(0) ** k + eval_q(k, rest)


def test_sstar_inverts_the_character_expansion():
    """sum_lam chi^lam_rho s*_lam(nu) = p#_rho(nu)."""
    nus = partitions_up_to(6)
    for size in range(1, 5):
        for rho in partitions_of(size):
            for nu in nus:
                total = sum(
                    (char_value(lam, rho) * eval_sstar(lam, nu) for lam in partitions_of(size)),
                    Fraction(0),
                )
                assert total == eval_psharp(rho, nu)


@pytest.mark.parametrize("d", [2, 4, 6])
def test_express_recovers_random_polynomials(d):
    """Evaluating a p#-polynomial and solving gives the same polynomial back."""
    rng = random.Random(d)
    monomials = [tuple(sorted(kappa)) for kappa in partitions_up_to(d)]
    for _ in range(3):
        chosen = rng.sample(monomials, min(5, len(monomials)))
        poly = PsharpPolynomial({mono: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for mono in chosen})
        f = poly.to_shifted().with_bound(d)
        assert express_in_psharp(f) == poly


def test_express_wreath_generators():
    """Over Z2, p#_{k,psi} and their products expand as themselves."""
    z2 = builtin_group("Z2")
    assert express_in_psharp(psharp(2, 1), z2) == PsharpPolynomial({((2, 1),): 1})

    f = psharp(1, 0) * psharp(1, 1) + psharp(2, 0).scale(3)
    poly = express_in_psharp(f, z2)
    assert poly == PsharpPolynomial({((1, 0), (1, 1)): 1, ((2, 0),): 3})


def test_hstar_rejects_multipartitions():
    z2 = builtin_group("Z2")
    with pytest.raises(PartitionError):
        eval_hstar(1, Multipartition.from_mapping(z2, {0: [1]}))
