"""Elements of the rook monoids Gamma(n, G): partial monomial matrices over G.

A matrix is stored by columns: ``cols[j]`` is ``None`` when column ``j`` is
zero, otherwise ``(i, g)`` meaning the single nonzero entry of column ``j``
sits in row ``i`` and carries the group label ``g``. Indices are 0-based
internally and 1-based in every text form.

Permutations act as matrices with ``s[i][j] = 1`` iff ``s(j) = i``, so the
matrix product is composition of maps.
"""

from __future__ import annotations

import itertools
import logging
import math
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Literal

from app.config import get_bounds
from app.errors import GroupMismatchError, SizeMismatchError, VGAlgError
from app.groups import FiniteGroupTable, trivial_group

logger = logging.getLogger(__name__)

Entry = tuple[int, int] | None


@dataclass(frozen=True, slots=True)
class MonomialMatrix:
    """An element of Gamma(n, G).

    Equality and hashing use the size and the column data; the group is
    checked when elements are combined.
    """

    size: int
    cols: tuple[Entry, ...]
    group: FiniteGroupTable = field(
        default_factory=trivial_group, compare=False, hash=False, repr=False
    )

    @classmethod
    def from_cols(
        cls, cols: Sequence[Entry], group: FiniteGroupTable | None = None
    ) -> "MonomialMatrix":
        """Build a matrix from column data, checking semigroup membership.

        Raises:
            VGAlgError: If a row is used twice or an index is out of range.
        """
        group = group or trivial_group()
        n = len(cols)
        seen_rows: set[int] = set()
        for j, entry in enumerate(cols):
            if entry is None:
                continue
            i, g = entry
            if not 0 <= i < n:
                raise VGAlgError(f"column {j + 1}: row {i + 1} out of range")
            if not 0 <= g < group.order:
                raise VGAlgError(f"column {j + 1}: label {g} not in {group.name}")
            if i in seen_rows:
                raise VGAlgError(f"row {i + 1} carries two nonzero entries")
            seen_rows.add(i)
        return cls(n, tuple(cols), group)

    # -- structure --------------------------------------------------------

    @property
    def rows(self) -> dict[int, tuple[int, int]]:
        """Map row index to ``(column, label)`` for the nonzero rows."""
        return {e[0]: (j, e[1]) for j, e in enumerate(self.cols) if e is not None}

    @property
    def rank(self) -> int:
        return sum(1 for e in self.cols if e is not None)

    @property
    def is_unit(self) -> bool:
        """True for elements of G(n) (full support)."""
        return all(e is not None for e in self.cols)

    @property
    def is_permutation(self) -> bool:
        return all(e is not None and e[1] == 0 for e in self.cols)

    @property
    def is_identity(self) -> bool:
        return all(e == (j, 0) for j, e in enumerate(self.cols))

    @property
    def degree(self) -> int:
        """Number of diagonal entries distinct from 1 (zeros included)."""
        return sum(1 for j, e in enumerate(self.cols) if e != (j, 0))

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        return compose(self, other)

    def truncate(self, r: int) -> "MonomialMatrix":
        return truncate(self, r)

    def shift(self) -> "MonomialMatrix":
        return shift(self)

    def star(self) -> "MonomialMatrix":
        return star(self)

    def embed(self, n: int) -> "MonomialMatrix":
        return embed(self, n)

    def __str__(self) -> str:
        return format_monomial(self)


@dataclass(frozen=True, slots=True)
class OmegaMatrix:
    """An l x n matrix with exactly one nonzero entry per row, at distinct columns.

    ``rows[q]`` is ``(column, label)`` of row ``q``.
    """

    n: int
    rows: tuple[tuple[int, int], ...]


# -- constructors -------------------------------------------------------------


def identity(n: int, group: FiniteGroupTable | None = None) -> MonomialMatrix:
    return MonomialMatrix(n, tuple((j, 0) for j in range(n)), group or trivial_group())


def zero(n: int, group: FiniteGroupTable | None = None) -> MonomialMatrix:
    """The zero matrix (the element written ``∅``)."""
    return MonomialMatrix(n, (None,) * n, group or trivial_group())


def from_permutation(
    perm: Sequence[int], group: FiniteGroupTable | None = None
) -> MonomialMatrix:
    """Permutation matrix of a 0-based one-line permutation ``perm[j] = s(j)``."""
    return MonomialMatrix(len(perm), tuple((i, 0) for i in perm), group or trivial_group())


def cycle(
    points: Sequence[int], n: int, group: FiniteGroupTable | None = None
) -> MonomialMatrix:
    """The cycle i1 -> i2 -> ... -> ik -> i1 on 1-based points."""
    perm = list(range(n))
    k = len(points)
    if len(set(points)) != k or any(not 1 <= p <= n for p in points):
        raise VGAlgError(f"invalid cycle {tuple(points)} in S({n})")
    for a in range(k):
        perm[points[a] - 1] = points[(a + 1) % k] - 1
    return from_permutation(perm, group)


def transposition(
    i: int, j: int, n: int, group: FiniteGroupTable | None = None
) -> MonomialMatrix:
    return cycle((i, j), n, group)


def adjacent(i: int, n: int, group: FiniteGroupTable | None = None) -> MonomialMatrix:
    """The elementary transposition s_i = (i, i+1)."""
    return transposition(i, i + 1, n, group)


def eps(
    points: Iterable[int], n: int, group: FiniteGroupTable | None = None
) -> MonomialMatrix:
    """The idempotent eps_I zeroing the 1-based coordinates in I."""
    killed = {p - 1 for p in points}
    if any(not 0 <= p < n for p in killed):
        raise VGAlgError(f"eps support {sorted(p + 1 for p in killed)} outside 1..{n}")
    return MonomialMatrix(
        n, tuple(None if j in killed else (j, 0) for j in range(n)), group or trivial_group()
    )


def label(
    g: int, i: int, n: int, group: FiniteGroupTable
) -> MonomialMatrix:
    """The diagonal element g^(i): label ``g`` in slot ``i`` (1-based), 1 elsewhere."""
    if not 0 <= g < group.order:
        raise VGAlgError(f"label {g} not in {group.name}")
    return MonomialMatrix(
        n, tuple((j, g if j == i - 1 else 0) for j in range(n)), group
    )


# -- operations ---------------------------------------------------------------


def _check_compatible(a: MonomialMatrix, b: MonomialMatrix) -> None:
    if a.size != b.size:
        raise SizeMismatchError(f"sizes {a.size} and {b.size} differ")
    if a.group is not b.group and a.group != b.group:
        raise GroupMismatchError(f"groups {a.group.name} and {b.group.name} differ")


def compose(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    """Matrix product ``a·b`` with labels multiplied along matched positions.

    Raises:
        SizeMismatchError: If the sizes differ.
        GroupMismatchError: If the labels come from different groups.
    """
    _check_compatible(a, b)
    mult = a.group.mult
    acols = a.cols
    out: list[Entry] = []
    for entry in b.cols:
        if entry is None:
            out.append(None)
            continue
        j, h = entry
        hit = acols[j]
        if hit is None:
            out.append(None)
        else:
            out.append((hit[0], mult[hit[1]][h]))
    return MonomialMatrix(a.size, tuple(out), a.group)


def degree(a: MonomialMatrix) -> int:
    return a.degree


def truncate(a: MonomialMatrix, r: int) -> MonomialMatrix:
    """The upper-left ``r x r`` corner.

    Raises:
        VGAlgError: If ``r`` is outside ``1..a.size``.
    """
    if not 0 <= r <= a.size:
        raise VGAlgError(f"cannot truncate size {a.size} to {r}")
    return MonomialMatrix(
        r,
        tuple(e if e is not None and e[0] < r else None for e in a.cols[:r]),
        a.group,
    )


def shift(a: MonomialMatrix) -> MonomialMatrix:
    """The shift xi: prepend a fixed point and move every index up by one."""
    cols = ((0, 0),) + tuple(None if e is None else (e[0] + 1, e[1]) for e in a.cols)
    return MonomialMatrix(a.size + 1, cols, a.group)


def embed(a: MonomialMatrix, n: int) -> MonomialMatrix:
    """Natural embedding Gamma(m, G) -> Gamma(n, G), fixing the new points."""
    if n < a.size:
        raise VGAlgError(f"cannot embed size {a.size} into {n}")
    return MonomialMatrix(
        n, a.cols + tuple((j, 0) for j in range(a.size, n)), a.group
    )


def star(a: MonomialMatrix) -> MonomialMatrix:
    """The involution ``(a*)_ij = (a_ji)^-1``."""
    inv = a.group.inv
    out: list[Entry] = [None] * a.size
    for j, e in enumerate(a.cols):
        if e is not None:
            out[e[0]] = (j, inv[e[1]])
    return MonomialMatrix(a.size, tuple(out), a.group)


# -- factorization ------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """``a = d · w · eps_I`` with ``d`` diagonal over G, ``w`` a permutation.

    ``labels`` maps image rows to nonidentity labels, ``perm`` is the 0-based
    one-line form of ``w`` (the order-preserving completion of the partial
    injection), and ``killed`` is the set I of zero columns.
    """

    labels: dict[int, int]
    perm: tuple[int, ...]
    killed: frozenset[int]


def factorize(a: MonomialMatrix) -> Factorization:
    n = a.size
    domain = [j for j, e in enumerate(a.cols) if e is not None]
    image = {a.cols[j][0] for j in domain}  # type: ignore[index]
    free_cols = [j for j in range(n) if a.cols[j] is None]
    free_rows = [i for i in range(n) if i not in image]
    perm = [0] * n
    labels: dict[int, int] = {}
    for j in domain:
        i, g = a.cols[j]  # type: ignore[misc]
        perm[j] = i
        if g != 0:
            labels[i] = g
    for j, i in zip(free_cols, free_rows):
        perm[j] = i
    return Factorization(labels, tuple(perm), frozenset(free_cols))


def adjacent_word(perm: Sequence[int]) -> list[int]:
    """A reduced word ``[i1, ..., iL]`` (1-based) with ``perm = s_i1 ... s_iL``."""
    current = list(perm)
    swaps: list[int] = []
    n = len(current)
    for end in range(n - 1, 0, -1):
        for j in range(end):
            if current[j] > current[j + 1]:
                current[j], current[j + 1] = current[j + 1], current[j]
                swaps.append(j + 1)
    return swaps[::-1]


def cycles_of(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles of a 0-based permutation, each starting at its least point."""
    seen: set[int] = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    """Cycle lengths of a permutation, fixed points included, in decreasing order."""
    lengths = [len(c) for c in cycles_of(perm)]
    fixed = len(perm) - sum(lengths)
    return tuple(sorted(lengths, reverse=True)) + (1,) * fixed


# -- text form ----------------------------------------------------------------


def format_monomial(a: MonomialMatrix) -> str:
    """Canonical text: cycles, then ``[g<label>@<row>]``, then ``eps{...}``.

    The identity prints as ``1``.
    """
    fac = factorize(a)
    parts = []
    cyc = "".join(
        "(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles_of(fac.perm)
    )
    if cyc:
        parts.append(cyc)
    if fac.labels:
        parts.append("".join(f"[g{g}@{i + 1}]" for i, g in sorted(fac.labels.items())))
    if fac.killed:
        parts.append("eps{" + ",".join(str(j + 1) for j in sorted(fac.killed)) + "}")
    return " ".join(parts) if parts else "1"


_TOKEN = re.compile(r"\(([\d,\s]+)\)|\[g(\d+)@(\d+)\]|eps\{([\d,\s]*)\}|(1)\b")


def parse_monomial(
    text: str, n: int, group: FiniteGroupTable | None = None
) -> MonomialMatrix:
    """Parse the canonical text form back into a matrix of size ``n``.

    Cycles compose left to right as written (rightmost acts first).
    """
    group = group or trivial_group()
    result = identity(n, group)
    labels = identity(n, group)
    killed: set[int] = set()
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise VGAlgError(f"cannot parse monomial {text!r} at offset {pos}")
        if m.group(1) is not None:
            pts = [int(p) for p in m.group(1).split(",") if p.strip()]
            result = compose(result, cycle(pts, n, group))
        elif m.group(2) is not None:
            labels = compose(labels, label(int(m.group(2)), int(m.group(3)), n, group))
        elif m.group(4) is not None:
            killed.update(int(p) for p in m.group(4).split(",") if p.strip())
        pos = m.end()
    return compose(compose(labels, result), eps(killed, n, group))


# -- enumeration --------------------------------------------------------------

Kind = Literal["S", "G", "Gamma", "Omega"]


def gamma_order(n: int, group: FiniteGroupTable | None = None) -> int:
    """|Gamma(n, G)| = sum over l of C(n, l)^2 l! |G|^l."""
    order = group.order if group else 1
    return sum(math.comb(n, l) ** 2 * math.factorial(l) * order**l for l in range(n + 1))


def omega_order(ell: int, n: int, group: FiniteGroupTable | None = None) -> int:
    order = group.order if group else 1
    return math.perm(n, ell) * order**ell


def enumerate_elements(
    kind: Kind,
    n: int,
    group: FiniteGroupTable | None = None,
    ell: int | None = None,
) -> Iterator[MonomialMatrix] | Iterator[OmegaMatrix]:
    """Exhaustive, duplicate-free stream of S(n), G(n), Gamma(n, G) or Omega(l, n, G).

    Raises:
        BoundExceededError: If the request exceeds the configured bounds.
        VGAlgError: On an unknown kind or missing ``ell`` for Omega.
    """
    group = group or trivial_group()
    bounds = get_bounds()
    if kind == "S":
        bounds.check("max_sym_n", n)
        return (from_permutation(p, group) for p in itertools.permutations(range(n)))
    if kind == "G":
        bounds.check("max_group_elements", group.order**n * math.factorial(n))
        return _units(n, group)
    if kind == "Gamma":
        bounds.check("max_gamma_n", n)
        bounds.check("max_group_elements", gamma_order(n, group))
        return _gamma(n, group)
    if kind == "Omega":
        if ell is None or not 0 <= ell <= n:
            raise VGAlgError(f"Omega needs 0 <= l <= n, got l={ell}, n={n}")
        bounds.check("max_group_elements", omega_order(ell, n, group))
        return _omega(ell, n, group)
    raise VGAlgError(f"unknown kind {kind!r}")


def _units(n: int, group: FiniteGroupTable) -> Iterator[MonomialMatrix]:
    for perm in itertools.permutations(range(n)):
        for labels in itertools.product(range(group.order), repeat=n):
            yield MonomialMatrix(
                n, tuple((perm[j], labels[j]) for j in range(n)), group
            )


def _gamma(n: int, group: FiniteGroupTable) -> Iterator[MonomialMatrix]:
    for ell in range(n + 1):
        for domain in itertools.combinations(range(n), ell):
            for image in itertools.permutations(range(n), ell):
                for labels in itertools.product(range(group.order), repeat=ell):
                    cols: list[Entry] = [None] * n
                    for j, i, g in zip(domain, image, labels):
                        cols[j] = (i, g)
                    yield MonomialMatrix(n, tuple(cols), group)


def _omega(ell: int, n: int, group: FiniteGroupTable) -> Iterator[OmegaMatrix]:
    for columns in itertools.permutations(range(n), ell):
        for labels in itertools.product(range(group.order), repeat=ell):
            yield OmegaMatrix(n, tuple(zip(columns, labels)))
