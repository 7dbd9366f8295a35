"""Finite groups given by multiplication tables and rational character tables."""

from __future__ import annotations

import json
import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any

import sympy
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_serializer,
    field_validator,
    model_validator,
)

from app.errors import GroupTableError, VGAlgError
from app.utils.rational import fraction_str, to_fraction

logger = logging.getLogger(__name__)

Matrix = list[list[Fraction]]


class FiniteGroupTable(BaseModel):
    """A finite group G with its conjugacy classes and irreducible characters.

    Element 0 is the identity. Class 0 is ``{0}`` and character 0 is trivial.
    ``permutations`` optionally realizes the group as permutations of points;
    it is used to build matrices of irreducibles of dimension > 1.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    order: int
    mult: list[list[int]]
    inv: list[int]
    classes: list[list[int]]
    char_table: list[list[Fraction]]
    dims: list[int]
    permutations: list[list[int]] | None = Field(default=None)

    @field_validator("char_table", mode="before")
    @classmethod
    def _parse_char_table(cls, value: Any) -> Any:
        if not isinstance(value, list):
            return value
        parsed = []
        for i, row in enumerate(value):
            if not isinstance(row, list):
                raise GroupTableError(f"char_table[{i}]", "row is not a list")
            cells = []
            for j, cell in enumerate(row):
                try:
                    cells.append(to_fraction(cell))
                except ValueError as e:
                    raise GroupTableError(
                        f"char_table[{i}][{j}]",
                        f"{e}; only rational character values are supported",
                    ) from None
            parsed.append(cells)
        return parsed

    @field_serializer("char_table")
    def _dump_char_table(self, value: list[list[Fraction]]) -> list[list[str]]:
        return [[fraction_str(x) for x in row] for row in value]

    @model_validator(mode="after")
    def _check_invariants(self) -> "FiniteGroupTable":
        _validate(self)
        return self

    # -- derived data ---------------------------------------------------

    @cached_property
    def class_of(self) -> list[int]:
        """Map element index to the index of its conjugacy class."""
        result = [0] * self.order
        for c, members in enumerate(self.classes):
            for g in members:
                result[g] = c
        return result

    @cached_property
    def generators(self) -> list[int]:
        """A deterministic generating set, chosen greedily in element order."""
        gens: list[int] = []
        reached = {0}
        for g in range(self.order):
            if g not in reached:
                gens.append(g)
                reached = self._closure(gens)
        return gens

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def num_characters(self) -> int:
        return len(self.char_table)

    def character(self, psi: int, g: int) -> Fraction:
        """Value of the irreducible character ``psi`` at element ``g``."""
        return self.char_table[psi][self.class_of[g]]

    def class_function_value(self, values: Sequence[Fraction], g: int) -> Fraction:
        """Evaluate a class function given by its values per class."""
        return values[self.class_of[g]]

    def _closure(self, gens: Sequence[int]) -> set[int]:
        reached = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mult[x][g]
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        return reached

    @cached_property
    def _irrep_cache(self) -> dict[int, list[Matrix]]:
        return {}

    def irrep_matrices(self, psi: int) -> list[Matrix]:
        """Matrices of an irreducible representation affording character ``psi``.

        One-dimensional characters are their own representations. Higher
        dimensional ones are cut out of the permutation realization by the
        central idempotent, which requires ``psi`` to occur there once.

        Returns:
            One ``dim x dim`` matrix per element, indexed like the elements.

        Raises:
            VGAlgError: If no rational realization is available.
        """
        if psi in self._irrep_cache:
            return self._irrep_cache[psi]
        if not 0 <= psi < self.num_characters:
            raise VGAlgError(f"{self.name}: no character with index {psi}")

        if self.dims[psi] == 1:
            mats = [[[self.character(psi, g)]] for g in range(self.order)]
        else:
            mats = self._project_irrep(psi)
        self._irrep_cache[psi] = mats
        return mats

    def _project_irrep(self, psi: int) -> list[Matrix]:
        if self.permutations is None:
            raise VGAlgError(
                f"{self.name}: character {psi} has dimension {self.dims[psi]} "
                "and the group has no permutation realization"
            )
        degree = len(self.permutations[0])

        def perm_matrix(g: int) -> sympy.Matrix:
            p = self.permutations[g]
            return sympy.Matrix(
                degree, degree, lambda i, j: 1 if p[j] == i else 0
            )

        scale = sympy.Rational(self.dims[psi], self.order)
        projector = sympy.zeros(degree, degree)
        for g in range(self.order):
            chi = self.character(psi, self.inv[g])
            projector += sympy.Rational(chi.numerator, chi.denominator) * perm_matrix(g)
        projector = scale * projector

        basis = projector.columnspace()
        if len(basis) != self.dims[psi]:
            raise VGAlgError(
                f"{self.name}: character {psi} occurs {len(basis) // max(self.dims[psi], 1)} "
                "times in the permutation realization; need exactly once"
            )
        b = sympy.Matrix.hstack(*basis)
        left_inverse = (b.T * b).inv() * b.T
        mats = []
        for g in range(self.order):
            m = left_inverse * perm_matrix(g) * b
            mats.append([[to_fraction(m[i, j]) for j in range(m.cols)] for i in range(m.rows)])
        logger.debug("projected irrep %d of %s (dim %d)", psi, self.name, len(basis))
        return mats

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        """Convert the table to a JSON-ready dictionary."""
        data = self.model_dump()
        if data.get("permutations") is None:
            data.pop("permutations", None)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteGroupTable":
        """Create a table from a dictionary, reporting the first failure by location."""
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            err = e.errors()[0]
            location = ".".join(str(part) for part in err["loc"]) or "<root>"
            raise GroupTableError(location, err["msg"]) from None

    @classmethod
    def from_json(cls, path: str | Path) -> "FiniteGroupTable":
        """Load and validate a group definition file."""
        try:
            with open(path) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise GroupTableError(str(path), f"cannot read group file: {e}") from None
        if not isinstance(data, dict):
            raise GroupTableError("<root>", "group file must contain a JSON object")
        return cls.from_dict(data)

    @classmethod
    def from_permutations(
        cls,
        name: str,
        perms: Sequence[Sequence[int]],
        char_table: Sequence[Sequence[int | str]],
    ) -> "FiniteGroupTable":
        """Build a table from a permutation realization.

        ``perms[0]`` must be the identity. Classes are ordered by their least
        element, and ``char_table`` columns must follow that order.
        """
        perms = [tuple(p) for p in perms]
        index = {p: i for i, p in enumerate(perms)}
        order = len(perms)

        def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
            return tuple(p[x] for x in q)

        mult = [[index[compose(p, q)] for q in perms] for p in perms]
        inv = [row.index(0) for row in mult]
        seen: set[int] = set()
        classes = []
        for g in range(order):
            if g in seen:
                continue
            members = sorted({mult[mult[h][g]][inv[h]] for h in range(order)})
            seen.update(members)
            classes.append(members)
        dims = [int(to_fraction(row[0])) for row in char_table]
        return cls(
            name=name,
            order=order,
            mult=mult,
            inv=inv,
            classes=classes,
            char_table=[list(row) for row in char_table],
            dims=dims,
            permutations=[list(p) for p in perms],
        )


def _validate(table: FiniteGroupTable) -> None:
    n = table.order
    if n < 1:
        raise GroupTableError("order", "must be positive")
    if len(table.mult) != n:
        raise GroupTableError("mult", f"expected {n} rows, got {len(table.mult)}")
    for i, row in enumerate(table.mult):
        if len(row) != n:
            raise GroupTableError(f"mult[{i}]", f"expected {n} entries, got {len(row)}")
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupTableError(f"mult[{i}][{j}]", f"index {x} out of range")
    for i in range(n):
        if table.mult[0][i] != i or table.mult[i][0] != i:
            raise GroupTableError(f"mult[{i}]", "element 0 is not a two-sided identity")
    for a in range(n):
        for b in range(n):
            ab = table.mult[a][b]
            for c in range(n):
                if table.mult[ab][c] != table.mult[a][table.mult[b][c]]:
                    raise GroupTableError(f"mult[{a}][{b}]", f"not associative with {c}")

    if len(table.inv) != n:
        raise GroupTableError("inv", f"expected {n} entries")
    for g, h in enumerate(table.inv):
        if not 0 <= h < n or table.mult[g][h] != 0 or table.mult[h][g] != 0:
            raise GroupTableError(f"inv[{g}]", f"{h} is not the inverse of {g}")

    if not table.classes or table.classes[0] != [0]:
        raise GroupTableError("classes[0]", "class 0 must be [0]")
    covered: list[int] = sorted(g for c in table.classes for g in c)
    if covered != list(range(n)):
        raise GroupTableError("classes", "classes must partition the elements")
    for c, members in enumerate(table.classes):
        g = members[0]
        conj = {table.mult[table.mult[h][g]][table.inv[h]] for h in range(n)}
        if conj != set(members):
            raise GroupTableError(f"classes[{c}]", "not a conjugacy class")

    k = len(table.classes)
    if len(table.char_table) != k:
        raise GroupTableError("char_table", f"expected {k} characters, one per class")
    for psi, row in enumerate(table.char_table):
        if len(row) != k:
            raise GroupTableError(f"char_table[{psi}]", f"expected {k} values")
    if any(x != 1 for x in table.char_table[0]):
        raise GroupTableError("char_table[0]", "row 0 must be the trivial character")
    if len(table.dims) != k:
        raise GroupTableError("dims", f"expected {k} entries")
    for psi, d in enumerate(table.dims):
        if table.char_table[psi][0] != d:
            raise GroupTableError(f"dims[{psi}]", "must equal the character at the identity")
    if sum(d * d for d in table.dims) != n:
        raise GroupTableError("dims", "squares of the dimensions must sum to the order")
    sizes = [len(c) for c in table.classes]
    for psi in range(k):
        for phi in range(psi, k):
            total = sum(
                sizes[c] * table.char_table[psi][c] * table.char_table[phi][c]
                for c in range(k)
            )
            expected = n if psi == phi else 0
            if total != expected:
                raise GroupTableError(
                    f"char_table[{psi}]", f"not orthogonal to character {phi}"
                )

    if table.permutations is not None:
        if len(table.permutations) != n:
            raise GroupTableError("permutations", f"expected {n} permutations")
        degree = len(table.permutations[0])
        for g, p in enumerate(table.permutations):
            if sorted(p) != list(range(degree)):
                raise GroupTableError(f"permutations[{g}]", "not a permutation")
        for a in range(n):
            pa = table.permutations[a]
            for b in range(n):
                pb = table.permutations[b]
                if [pa[x] for x in pb] != table.permutations[table.mult[a][b]]:
                    raise GroupTableError(
                        f"permutations[{a}]", f"product with {b} disagrees with mult"
                    )


# -- built-in groups --------------------------------------------------------


def _trivial() -> FiniteGroupTable:
    return FiniteGroupTable.from_permutations("trivial", [(0,)], [[1]])


def _z2() -> FiniteGroupTable:
    return FiniteGroupTable.from_permutations(
        "Z2", [(0, 1), (1, 0)], [[1, 1], [1, -1]]
    )


def _klein() -> FiniteGroupTable:
    perms = [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    chars = [
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, 1, -1, -1],
        [1, -1, -1, 1],
    ]
    return FiniteGroupTable.from_permutations("Klein", perms, chars)


def _s3() -> FiniteGroupTable:
    # e, (0 1), (1 2), (0 2), (0 1 2), (0 2 1)
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    chars = [
        [1, 1, 1],
        [1, -1, 1],
        [2, 0, -1],
    ]
    return FiniteGroupTable.from_permutations("S3", perms, chars)


def _d4() -> FiniteGroupTable:
    # r^a s^b on the square's vertices, r: i -> i+1, s: i -> -i (mod 4)
    def rot(a: int) -> tuple[int, ...]:
        return tuple((i + a) % 4 for i in range(4))

    s = (0, 3, 2, 1)
    perms = [rot(a) for a in range(4)] + [tuple(rot(a)[x] for x in s) for a in range(4)]
    # classes: {e}, {r, r^3}, {r^2}, {s, r^2 s}, {rs, r^3 s}
    chars = [
        [1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1],
        [1, -1, 1, 1, -1],
        [1, -1, 1, -1, 1],
        [2, 0, -2, 0, 0],
    ]
    return FiniteGroupTable.from_permutations("D4", perms, chars)


_BUILTIN_FACTORIES = {
    "trivial": _trivial,
    "Z2": _z2,
    "Klein": _klein,
    "S3": _s3,
    "D4": _d4,
}

_builtin_cache: dict[str, FiniteGroupTable] = {}

BUILTIN_NAMES = tuple(_BUILTIN_FACTORIES)


def builtin_group(name: str) -> FiniteGroupTable:
    """Return a built-in group by name (``trivial``, ``Z2``, ``Klein``, ``S3``, ``D4``).

    Raises:
        VGAlgError: If the name is unknown.
    """
    if name not in _BUILTIN_FACTORIES:
        raise VGAlgError(
            f"unknown group {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}"
        )
    if name not in _builtin_cache:
        _builtin_cache[name] = _BUILTIN_FACTORIES[name]()
    return _builtin_cache[name]


def trivial_group() -> FiniteGroupTable:
    return builtin_group("trivial")


def resolve_group(spec: str) -> FiniteGroupTable:
    """Resolve a CLI ``--group`` value: a built-in name or a path to a JSON file."""
    if spec in _BUILTIN_FACTORIES:
        return builtin_group(spec)
    return FiniteGroupTable.from_json(spec)
