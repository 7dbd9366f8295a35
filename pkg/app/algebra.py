"""Semigroup algebras A(n, G) = Q[Gamma(n, G)] with exact rational coefficients."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict

from app.config import get_bounds
from app.errors import GroupMismatchError, SizeMismatchError, VGAlgError
from app.groups import FiniteGroupTable, trivial_group
from app.linalg import SparseEliminator
from app.monomial import (
    MonomialMatrix,
    adjacent,
    compose,
    enumerate_elements,
    eps,
    identity,
    label,
    shift,
    star,
    truncate,
)
from app.utils.rational import fraction_str

logger = logging.getLogger(__name__)

Scalar = Fraction | int


class AlgebraElement:
    """A finitely supported rational combination of elements of Gamma(n, G).

    Values are treated as immutable: every operation returns a new element.
    Zero coefficients are never stored, so equality is equality of term maps.
    """

    __slots__ = ("size", "group", "_terms")

    def __init__(
        self,
        size: int,
        terms: Mapping[MonomialMatrix, Scalar] | Iterable[tuple[MonomialMatrix, Scalar]] = (),
        group: FiniteGroupTable | None = None,
    ):
        self.size = size
        self.group = group or trivial_group()
        acc: dict[MonomialMatrix, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coef in items:
            if key.size != size:
                raise SizeMismatchError(f"term of size {key.size} in element of size {size}")
            if coef == 0:
                continue
            value = acc.get(key, 0) + Fraction(coef)
            if value == 0:
                acc.pop(key, None)
            else:
                acc[key] = value
        self._terms = acc

    @classmethod
    def _raw(
        cls, size: int, terms: dict[MonomialMatrix, Fraction], group: FiniteGroupTable
    ) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.size = size
        obj.group = group
        obj._terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, group: FiniteGroupTable | None = None) -> "AlgebraElement":
        return cls(n, (), group)

    @classmethod
    def one(cls, n: int, group: FiniteGroupTable | None = None) -> "AlgebraElement":
        return cls.of(identity(n, group))

    @classmethod
    def of(cls, key: MonomialMatrix, coef: Scalar = 1) -> "AlgebraElement":
        return cls(key.size, {key: coef}, key.group)

    @classmethod
    def scalar(
        cls, value: Scalar, n: int, group: FiniteGroupTable | None = None
    ) -> "AlgebraElement":
        return cls.of(identity(n, group), value)

    # -- access ----------------------------------------------------------------

    @property
    def terms(self) -> dict[MonomialMatrix, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[MonomialMatrix, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, key: MonomialMatrix) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> float:
        """Max degree over the support; ``-inf`` for zero."""
        if not self._terms:
            return float("-inf")
        return max(k.degree for k in self._terms)

    def scalar_value(self) -> Fraction | None:
        """The value c if this element is c·1, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1:
            key, coef = next(iter(self._terms.items()))
            if key.is_identity:
                return coef
        return None

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if self.size != other.size:
            raise SizeMismatchError(f"sizes {self.size} and {other.size} differ")
        if self.group is not other.group and self.group != other.group:
            raise GroupMismatchError(
                f"groups {self.group.name} and {other.group.name} differ"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            value = acc.get(k, 0) + v
            if value == 0:
                acc.pop(k, None)
            else:
                acc[k] = value
        return AlgebraElement._raw(self.size, acc, self.group)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw(
            self.size, {k: -v for k, v in self._terms.items()}, self.group
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "AlgebraElement":
        if c == 0:
            return AlgebraElement.zero(self.size, self.group)
        c = Fraction(c)
        return AlgebraElement._raw(
            self.size, {k: v * c for k, v in self._terms.items()}, self.group
        )

    def __mul__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> "AlgebraElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "AlgebraElement":
        result = AlgebraElement.one(self.size, self.group)
        for _ in range(k):
            result = multiply(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.size == other.size and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # -- linear maps -------------------------------------------------------------

    def truncate(self, r: int) -> "AlgebraElement":
        return truncate_linear(self, r)

    def shift(self) -> "AlgebraElement":
        return shift_linear(self)

    def star(self) -> "AlgebraElement":
        return star_linear(self)

    def embed(self, n: int) -> "AlgebraElement":
        return AlgebraElement(n, ((k.embed(n), v) for k, v in self._terms.items()), self.group)

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other) - multiply(other, self)

    # -- text -------------------------------------------------------------------

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement(size={self.size}, {format_element(self)!r})"


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Distributive product of two elements of the same algebra.

    Raises:
        SizeMismatchError: If the sizes differ.
        GroupMismatchError: If the groups differ.
    """
    x._check(y)
    xs = x.scalar_value()
    if xs is not None:
        return y.scale(xs)
    ys = y.scalar_value()
    if ys is not None:
        return x.scale(ys)
    acc: dict[MonomialMatrix, Fraction] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            key = compose(a, b)
            value = acc.get(key, 0) + ca * cb
            if value == 0:
                acc.pop(key, None)
            else:
                acc[key] = value
    return AlgebraElement._raw(x.size, acc, x.group)


def truncate_linear(x: AlgebraElement, r: int) -> AlgebraElement:
    """Linear extension of the corner truncation; colliding keys add up."""
    return AlgebraElement(r, ((truncate(k, r), v) for k, v in x.items()), x.group)


def shift_linear(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.size + 1, ((shift(k), v) for k, v in x.items()), x.group)


def star_linear(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.size, ((star(k), v) for k, v in x.items()), x.group)


def format_element(x: AlgebraElement) -> str:
    """Canonical text ``"c * monomial + ..."`` in a deterministic term order."""
    if x.is_zero:
        return "0"
    terms = sorted(x.items(), key=lambda kv: (kv[0].degree, str(kv[0])))
    return " + ".join(f"{fraction_str(c)} * {k}" for k, c in terms)


# -- named elements -------------------------------------------------------------


def element_of(key: MonomialMatrix, coef: Scalar = 1) -> AlgebraElement:
    return AlgebraElement.of(key, coef)


def eps_bar(i: int, n: int, group: FiniteGroupTable | None = None) -> AlgebraElement:
    """The idempotent 1 - eps_i."""
    return AlgebraElement.one(n, group) - AlgebraElement.of(eps([i], n, group))


def eps_bar_product(
    points: Iterable[int], n: int, group: FiniteGroupTable | None = None
) -> AlgebraElement:
    """Expanded product of the commuting idempotents 1 - eps_i over ``points``.

    Equals the sum over subsets J of (-1)^|J| eps_J.
    """
    pts = sorted(set(points))
    acc: dict[MonomialMatrix, Fraction] = {}
    for mask in range(1 << len(pts)):
        subset = [p for b, p in enumerate(pts) if mask >> b & 1]
        acc[eps(subset, n, group)] = Fraction((-1) ** len(subset))
    return AlgebraElement._raw(n, acc, group or trivial_group())


# -- centralizers ------------------------------------------------------------------


class CentralizerSpec(BaseModel):
    """Which centralizer: of G_m(n) in Q[G(n)] (group) or of Gamma_m(n, G) in A(n, G)."""

    model_config = ConfigDict(frozen=True)

    m: int = 0
    flavor: Literal["group", "semigroup"] = "semigroup"


@dataclass(frozen=True)
class CentralizerResult:
    """Outcome of a membership test; carries a witness on failure."""

    member: bool
    generator: MonomialMatrix | None = None
    commutator: AlgebraElement | None = None

    def __bool__(self) -> bool:
        return self.member


def centralizer_generators(
    n: int, spec: CentralizerSpec, group: FiniteGroupTable | None = None
) -> list[MonomialMatrix]:
    """Generators of G_m(n) (group flavor) or Gamma_m(n, G) (semigroup flavor).

    s_j for m+1 <= j <= n-1, g^(m+1) for g in a generating set of G, and
    for the semigroup flavor also eps_{m+1}.
    """
    group = group or trivial_group()
    m = spec.m
    if m > n:
        raise VGAlgError(f"centralizer level m={m} exceeds size {n}")
    if m == n:
        return []
    gens = [adjacent(j, n, group) for j in range(m + 1, n)]
    gens += [label(g, m + 1, n, group) for g in group.generators]
    if spec.flavor == "semigroup":
        gens.append(eps([m + 1], n, group))
    return gens


def is_in_centralizer(x: AlgebraElement, spec: CentralizerSpec) -> CentralizerResult:
    """Test whether ``x`` commutes with every generator of the level-m subsemigroup."""
    for gen in centralizer_generators(x.size, spec, x.group):
        g = AlgebraElement.of(gen)
        comm = multiply(x, g) - multiply(g, x)
        if not comm.is_zero:
            logger.debug("commutator with %s is nonzero", gen)
            return CentralizerResult(False, gen, comm)
    return CentralizerResult(True)


def centralizer_elements(
    n: int, spec: CentralizerSpec, group: FiniteGroupTable | None = None
) -> Iterator[MonomialMatrix]:
    """Every element of G_m(n) or Gamma_m(n, G): those fixing 1..m."""
    group = group or trivial_group()
    kind = "G" if spec.flavor == "group" else "Gamma"
    rest = n - spec.m
    if rest == 0:
        yield identity(n, group)
        return
    for g in enumerate_elements(kind, rest, group):
        for _ in range(spec.m):
            g = shift(g)  # type: ignore[arg-type]
        yield g  # type: ignore[misc]


def commutes_with_all(x: AlgebraElement, elements: Iterable[MonomialMatrix]) -> CentralizerResult:
    """Brute-force membership test against an explicit list of elements."""
    for gen in elements:
        g = AlgebraElement.of(gen)
        comm = multiply(x, g) - multiply(g, x)
        if not comm.is_zero:
            return CentralizerResult(False, gen, comm)
    return CentralizerResult(True)


def _conjugation_orbits(
    elements: list[MonomialMatrix], units: list[MonomialMatrix]
) -> list[list[MonomialMatrix]]:
    inverses = [star(u) for u in units]
    seen: set[MonomialMatrix] = set()
    orbits = []
    for start in elements:
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for u, ui in zip(units, inverses):
                y = compose(compose(u, x), ui)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
                    frontier.append(y)
        orbits.append(orbit)
    return orbits


def centralizer_basis(
    n: int, spec: CentralizerSpec, group: FiniteGroupTable | None = None
) -> list[AlgebraElement]:
    """Exact basis of the centralizer subspace.

    Coefficients are constant on conjugation orbits of the invertible
    generators; the remaining (idempotent) generator contributes a sparse
    linear system over the orbit sums.

    Raises:
        BoundExceededError: If ``n`` exceeds ``max_centralizer_n``.
    """
    group = group or trivial_group()
    get_bounds().check("max_centralizer_n", n)
    kind = "G" if spec.flavor == "group" else "Gamma"
    elements = list(enumerate_elements(kind, n, group))  # type: ignore[arg-type]
    gens = centralizer_generators(n, spec, group)
    units = [g for g in gens if g.is_unit]
    idempotents = [g for g in gens if not g.is_unit]

    orbits = _conjugation_orbits(elements, units)
    orbit_of = {key: idx for idx, orbit in enumerate(orbits) for key in orbit}
    logger.debug("%d elements in %d orbits", len(elements), len(orbits))

    elim = SparseEliminator(list(range(len(orbits))))
    for e in idempotents:
        rows: dict[MonomialMatrix, dict[int, Fraction]] = {}
        for idx, orbit in enumerate(orbits):
            for key in orbit:
                right = compose(key, e)
                left = compose(e, key)
                if right == left:
                    continue
                r = rows.setdefault(right, {})
                r[idx] = r.get(idx, 0) + 1
                l_ = rows.setdefault(left, {})
                l_[idx] = l_.get(idx, 0) - 1
        for row in rows.values():
            elim.add({k: v for k, v in row.items() if v != 0})

    basis = []
    for vec in elim.nullspace():
        terms: dict[MonomialMatrix, Fraction] = {}
        for idx, coef in vec.items():
            for key in orbits[idx]:
                terms[key] = coef
        basis.append(AlgebraElement(n, terms, group))
    return basis
