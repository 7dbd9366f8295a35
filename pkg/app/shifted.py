"""Shifted symmetric functions: evaluation on (multi)partitions and p#-expansions.

A ``ShiftedFunction`` is a polynomial with rational coefficients in a small
alphabet of atoms (p*_{k,sigma}, p#_rho, s*_lam, h*_k). Evaluation is exact.
``express_in_psharp`` rewrites any such function as a polynomial in the
generators p#_k (or p#_{k,psi} over a finite group) by solving against
evaluations, which is what the lifting to central elements consumes.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import sympy
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import BasePolynomialError

from app.config import get_bounds
from app.errors import ParseError, PartitionError, SolverError, VGAlgError
from app.groups import FiniteGroupTable
from app.linalg import solve_square
from app.partitions import (
    Multipartition,
    Partition,
    bracket,
    char_value,
    dim_partition,
    multipartitions_of,
    multipartitions_up_to,
    padded,
    partitions_of,
    partitions_up_to,
    z_rho,
)
from app.utils.rational import fraction_str, to_fraction

logger = logging.getLogger(__name__)

Target = Union[Partition, Multipartition]


# -- evaluation ---------------------------------------------------------------


def eval_pstar(k: int, sigma: Fraction | int, lam: Partition) -> Fraction:
    """p*_{k,sigma}(lam) = sum_i ((lam_i + sigma - i)^k - (sigma - i)^k).

    Raises:
        VGAlgError: If k < 1.
    """
    if k < 1:
        raise VGAlgError(f"p*_k needs k >= 1, got {k}")
    sigma = Fraction(sigma)
    return sum(
        ((p + sigma - i) ** k - (sigma - i) ** k for i, p in enumerate(lam, start=1)),
        Fraction(0),
    )


def eval_q(k: int, lam: Partition) -> Fraction:
    return eval_pstar(k, 0, lam)


def eval_frakp(k: int, lam: Partition) -> Fraction:
    return eval_pstar(k, 1, lam)


def falling(n: int, k: int) -> int:
    return math.perm(n, k) if n >= k else 0


def eval_psharp(rho: Partition, nu: Partition) -> Fraction:
    """p#_rho(nu): n^{(k)} chi^nu at rho ∪ 1^{n-k}, over dim nu; 0 when |nu| < |rho|."""
    rho, nu = Partition(rho), Partition(nu)
    if not rho:
        raise PartitionError("p#_rho needs a nonempty rho")
    n, k = nu.size, rho.size
    if n < k:
        return Fraction(0)
    get_bounds().check("max_character_n", n)
    return Fraction(falling(n, k) * char_value(nu, padded(rho, n)), dim_partition(nu))


def eval_sstar(lam: Partition, nu: Partition) -> Fraction:
    """s*_lam(nu) by inverting p#_rho = sum_lam chi^lam_rho s*_lam."""
    lam = Partition(lam)
    if not lam:
        raise PartitionError("s*_lam needs a nonempty lam")
    return sum(
        (
            Fraction(char_value(lam, rho), z_rho(rho)) * eval_psharp(rho, nu)
            for rho in partitions_of(lam.size)
        ),
        Fraction(0),
    )


def eval_hstar(k: int, lam: Partition) -> Fraction:
    """h*_k(lam) = q_k(lam) + q_1(lam)^k.

    Raises:
        PartitionError: If lam is a multipartition; use ``eval_hstar_wreath``.
    """
    if isinstance(lam, Multipartition):
        raise PartitionError("h*_k of a multipartition is eval_hstar_wreath")
    return eval_q(k, Partition(lam)) + eval_q(1, Partition(lam)) ** k


def eval_hstar_wreath(k: int, blam: Multipartition) -> Fraction:
    """q_k(bλ(trivial)) + ||bλ||^k, the limit of the wreath approximating eigenvalues."""
    return eval_q(k, blam[0]) + Fraction(blam.norm) ** k


def frakp_combination(k: int, lam: Partition, n: int) -> Fraction:
    """sum_{i=0..k} (-1)^i C(k,i) n^{-i} frakp_{k+i}(lam[n]).

    Raises:
        PartitionError: If n < |lam| + lam_1.
    """
    lam = Partition(lam)
    if n < lam.size + lam.part(0):
        raise PartitionError(f"needs n >= |lam| + lam_1 = {lam.size + lam.part(0)}, got {n}")
    grown = bracket(lam, n)
    return sum(
        (
            (-1) ** i * math.comb(k, i) * Fraction(1, n**i) * eval_frakp(k + i, grown)
            for i in range(k + 1)
        ),
        Fraction(0),
    )


# -- atoms ----------------------------------------------------------------------


@dataclass(frozen=True)
class Pstar:
    k: int
    sigma: Fraction = Fraction(0)
    psi: int | None = None

    @property
    def degree(self) -> int:
        return self.k

    def evaluate(self, target: Target) -> Fraction:
        return eval_pstar(self.k, self.sigma, _slot(target, self.psi, self))

    def __str__(self) -> str:
        args = [str(self.k), fraction_str(self.sigma)]
        if self.psi is not None:
            args.append(str(self.psi))
        return f"pstar({','.join(args)})"


@dataclass(frozen=True)
class Psharp:
    rho: Partition
    psi: int | None = None

    @property
    def degree(self) -> int:
        return self.rho.size

    def evaluate(self, target: Target) -> Fraction:
        return eval_psharp(self.rho, _slot(target, self.psi, self))

    def __str__(self) -> str:
        if self.psi is None:
            return f"psharp({self.rho})"
        return f"psharp({self.rho},{self.psi})"


@dataclass(frozen=True)
class Sstar:
    lam: Partition

    @property
    def degree(self) -> int:
        return self.lam.size

    def evaluate(self, target: Target) -> Fraction:
        return eval_sstar(self.lam, _slot(target, None, self))

    def __str__(self) -> str:
        return f"sstar({self.lam})"


@dataclass(frozen=True)
class Hstar:
    k: int

    @property
    def degree(self) -> int:
        return self.k

    def evaluate(self, target: Target) -> Fraction:
        if isinstance(target, Multipartition):
            return eval_hstar_wreath(self.k, target)
        return eval_hstar(self.k, target)

    def __str__(self) -> str:
        return f"hstar({self.k})"


Atom = Union[Pstar, Psharp, Sstar, Hstar]
Monomial = tuple[Atom, ...]


def _slot(target: Target, psi: int | None, atom: object) -> Partition:
    if isinstance(target, Multipartition):
        if psi is None:
            raise PartitionError(f"{atom} needs a character index to act on a multipartition")
        return target[psi]
    if psi is not None:
        raise PartitionError(f"{atom} acts on multipartitions, got a partition")
    return target


def _monomial(atoms: Iterable[Atom]) -> Monomial:
    return tuple(sorted(atoms, key=str))


class ShiftedFunction:
    """A rational polynomial in shifted-symmetric atoms with a degree bound.

    The bound defaults to the weighted degree of the expression.
    """

    def __init__(
        self,
        terms: Mapping[Monomial, Fraction | int] | None = None,
        degree_bound: int | None = None,
    ):
        self._terms: dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            mono = _monomial(mono)
            value = self._terms.get(mono, 0) + Fraction(coef)
            if value == 0:
                self._terms.pop(mono, None)
            else:
                self._terms[mono] = value
        self._bound = degree_bound

    @classmethod
    def atom(cls, atom: Atom) -> "ShiftedFunction":
        return cls({(atom,): 1})

    @classmethod
    def constant(cls, value: Fraction | int) -> "ShiftedFunction":
        return cls({(): value})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def expression_degree(self) -> int:
        return max((sum(a.degree for a in mono) for mono in self._terms), default=0)

    @property
    def degree_bound(self) -> int:
        return self._bound if self._bound is not None else self.expression_degree

    @property
    def has_explicit_bound(self) -> bool:
        return self._bound is not None

    def with_bound(self, d: int) -> "ShiftedFunction":
        return ShiftedFunction(self._terms, d)

    @property
    def is_wreath(self) -> bool:
        return any(
            getattr(a, "psi", None) is not None for mono in self._terms for a in mono
        )

    def evaluate(self, target: Target) -> Fraction:
        total = Fraction(0)
        for mono, coef in self._terms.items():
            value = coef
            for a in mono:
                value *= a.evaluate(target)
            total += value
        return total

    __call__ = evaluate

    def __add__(self, other: "ShiftedFunction") -> "ShiftedFunction":
        terms = dict(self._terms)
        for mono, coef in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coef
        return ShiftedFunction(terms)

    def __neg__(self) -> "ShiftedFunction":
        return self.scale(-1)

    def __sub__(self, other: "ShiftedFunction") -> "ShiftedFunction":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "ShiftedFunction":
        return ShiftedFunction({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other: "ShiftedFunction | Fraction | int") -> "ShiftedFunction":
        if not isinstance(other, ShiftedFunction):
            return self.scale(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _monomial(m1 + m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return ShiftedFunction(terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftedFunction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coef in sorted(self._terms.items(), key=lambda kv: [str(a) for a in kv[0]]):
            body = "*".join(str(a) for a in mono)
            parts.append(f"{fraction_str(coef)}*{body}" if body else fraction_str(coef))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ShiftedFunction({str(self)!r}, degree_bound={self.degree_bound})"


def pstar(k: int, sigma: Fraction | int = 0, psi: int | None = None) -> ShiftedFunction:
    return ShiftedFunction.atom(Pstar(k, Fraction(sigma), psi))


def q(k: int, psi: int | None = None) -> ShiftedFunction:
    return pstar(k, 0, psi)


def frakp(k: int, psi: int | None = None) -> ShiftedFunction:
    return pstar(k, 1, psi)


def psharp(rho: Iterable[int] | int, psi: int | None = None) -> ShiftedFunction:
    parts = Partition([rho]) if isinstance(rho, int) else Partition(rho)
    if not parts:
        raise PartitionError("p#_rho needs a nonempty rho")
    return ShiftedFunction.atom(Psharp(parts, psi))


def sstar(lam: Iterable[int]) -> ShiftedFunction:
    lam = Partition(lam)
    if not lam:
        raise PartitionError("s*_lam needs a nonempty lam")
    return ShiftedFunction.atom(Sstar(lam))


def hstar(k: int) -> ShiftedFunction:
    if k < 1:
        raise VGAlgError(f"h*_k needs k >= 1, got {k}")
    return ShiftedFunction.atom(Hstar(k))


# -- p# polynomials -------------------------------------------------------------------

GeneratorKey = Union[int, tuple[int, int]]
PsharpMonomial = tuple[GeneratorKey, ...]


class PsharpPolynomial:
    """A polynomial in the generators p#_k (keys ``k``) or p#_{k,psi} (keys ``(k, psi)``)."""

    def __init__(self, terms: Mapping[PsharpMonomial, Fraction | int] | None = None):
        self.terms: dict[PsharpMonomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            if coef != 0:
                key = tuple(sorted(mono))
                self.terms[key] = self.terms.get(key, 0) + Fraction(coef)
        self.terms = {k: v for k, v in self.terms.items() if v != 0}

    @staticmethod
    def weight(mono: PsharpMonomial) -> int:
        return sum(g if isinstance(g, int) else g[0] for g in mono)

    @property
    def degree(self) -> int:
        return max((self.weight(m) for m in self.terms), default=0)

    def evaluate(self, target: Target) -> Fraction:
        total = Fraction(0)
        for mono, coef in self.terms.items():
            value = coef
            for g in mono:
                value *= _eval_generator(g, target)
            total += value
        return total

    def to_shifted(self) -> ShiftedFunction:
        terms = {}
        for mono, coef in self.terms.items():
            atoms = tuple(
                Psharp(Partition([g])) if isinstance(g, int) else Psharp(Partition([g[0]]), g[1])
                for g in mono
            )
            terms[atoms] = coef
        return ShiftedFunction(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PsharpPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, coef in sorted(self.terms.items(), key=lambda kv: (self.weight(kv[0]), kv[0])):
            body = "*".join(
                f"p#{g}" if isinstance(g, int) else f"p#{g[0]},{g[1]}" for g in mono
            )
            out.append(f"{fraction_str(coef)}*{body}" if body else fraction_str(coef))
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"PsharpPolynomial({str(self)!r})"


def _eval_generator(g: GeneratorKey, target: Target) -> Fraction:
    if isinstance(g, int):
        if isinstance(target, Multipartition):
            raise PartitionError("p#_k without a character index on a multipartition")
        return eval_psharp(Partition([g]), target)
    k, psi = g
    if not isinstance(target, Multipartition):
        raise PartitionError("p#_{k,psi} needs a multipartition")
    return eval_psharp(Partition([k]), target[psi])


def _unknowns(d: int, group: FiniteGroupTable | None) -> list[PsharpMonomial]:
    if group is None:
        return [tuple(sorted(kappa)) for kappa in partitions_up_to(d)]
    out = []
    for kappa in multipartitions_up_to(d, group):
        mono = tuple(sorted((k, psi) for psi, lam in enumerate(kappa.parts) for k in lam))
        out.append(mono)
    return out


def _points(d: int, group: FiniteGroupTable | None) -> list[Target]:
    if group is None:
        return list(partitions_up_to(d))
    return list(multipartitions_up_to(d, group))


def _checks(d: int, group: FiniteGroupTable | None) -> list[Target]:
    if group is None:
        return list(partitions_of(d + 1))
    return list(multipartitions_of(d + 1, group))


def _solve(f: ShiftedFunction, d: int, group: FiniteGroupTable | None) -> PsharpPolynomial | None:
    get_bounds().check("max_psharp_degree", d)
    unknowns = _unknowns(d, group)
    points = _points(d, group)
    matrix = [
        [
            math.prod((_eval_generator(g, nu) for g in mono), start=Fraction(1))
            for mono in unknowns
        ]
        for nu in points
    ]
    rhs = [f.evaluate(nu) for nu in points]
    logger.debug("p# solve: degree %d, %d unknowns", d, len(unknowns))
    solution = solve_square(matrix, rhs)
    poly = PsharpPolynomial(dict(zip(unknowns, solution)))
    for nu in _checks(d, group):
        if poly.evaluate(nu) != f.evaluate(nu):
            logger.debug("p# solve at degree %d fails validation at %s", d, nu)
            return None
    return poly


_expression_cache: dict[tuple, PsharpPolynomial] = {}


def express_in_psharp(
    f: ShiftedFunction, group: FiniteGroupTable | None = None
) -> PsharpPolynomial:
    """The unique p#-polynomial of weighted degree <= f.degree_bound agreeing with f.

    Solved exactly against all (multi)partitions of size <= d and validated
    on size d+1. A default bound d that fails is retried once with 2d.

    Raises:
        SolverError: If no polynomial within the bound reproduces f.
    """
    if group is not None and group.is_trivial and not f.is_wreath:
        group = None
    key = (f, group.name if group else None, f.degree_bound)
    if key in _expression_cache:
        return _expression_cache[key]

    d = f.degree_bound
    bounds_to_try = [d] if f.has_explicit_bound else [d, 2 * d]
    for bound in bounds_to_try:
        poly = _solve(f, bound, group)
        if poly is not None:
            _expression_cache[key] = poly
            return poly
    raise SolverError(f"{f} has no p# expansion of degree <= {bounds_to_try[-1]}")


# -- literals --------------------------------------------------------------------------


def parse_shifted(text: str) -> ShiftedFunction:
    """Parse a literal such as ``"2*hstar(2) + psharp([2,1]) - 1/2*pstar(3,1)"``.

    Functions: ``pstar(k, sigma[, psi])``, ``q(k[, psi])``, ``frakp(k[, psi])``,
    ``psharp(rho[, psi])``, ``sstar(lam)``, ``hstar(k)``.

    Raises:
        ParseError: If the text is not a polynomial in these functions.
    """
    atoms: dict[sympy.Symbol, Atom] = {}

    def register(atom: Atom) -> sympy.Symbol:
        sym = sympy.Symbol(f"atom{len(atoms)}")
        for existing, a in atoms.items():
            if a == atom:
                return existing
        atoms[sym] = atom
        return sym

    def _rho(value: object) -> Partition:
        if isinstance(value, (list, tuple)):
            return Partition(int(v) for v in value)
        return Partition([int(value)])  # type: ignore[call-overload]

    def _psi(args: tuple) -> int | None:
        return int(args[0]) if args else None

    local_dict = {
        "pstar": lambda k, sigma=0, *psi: register(Pstar(int(k), to_fraction(sympy.Rational(sigma)), _psi(psi))),
        "q": lambda k, *psi: register(Pstar(int(k), Fraction(0), _psi(psi))),
        "frakp": lambda k, *psi: register(Pstar(int(k), Fraction(1), _psi(psi))),
        "psharp": lambda rho, *psi: register(Psharp(_rho(rho), _psi(psi))),
        "sstar": lambda lam: register(Sstar(_rho(lam))),
        "hstar": lambda k: register(Hstar(int(k))),
    }
    try:
        expr = parse_expr(text, local_dict=local_dict)
        expr = sympy.expand(expr)
        symbols = list(atoms)
        if not symbols:
            return ShiftedFunction.constant(to_fraction(sympy.Rational(expr)))
        poly = sympy.Poly(expr, *symbols, domain="QQ")
    except (SyntaxError, TypeError, ValueError, BasePolynomialError, VGAlgError) as e:
        raise ParseError(f"cannot parse shifted function {text!r}: {e}") from None

    for a in atoms.values():
        if isinstance(a, (Pstar, Hstar)) and a.k < 1:
            raise ParseError(f"{a}: k must be >= 1")
        if isinstance(a, (Psharp, Sstar)) and not (a.rho if isinstance(a, Psharp) else a.lam):
            raise ParseError(f"{a}: partition must be nonempty")

    terms: dict[Monomial, Fraction] = {}
    for exponents, coef in poly.terms():
        mono = tuple(
            itertools.chain.from_iterable(
                [atoms[s]] * e for s, e in zip(symbols, exponents)
            )
        )
        terms[mono] = to_fraction(sympy.Rational(coef))
    return ShiftedFunction(terms)
