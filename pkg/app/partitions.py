"""Partitions, multipartitions and symmetric-group characters."""

from __future__ import annotations

import itertools
import json
import logging
import math
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from app.errors import PartitionError
from app.groups import FiniteGroupTable
from app.monomial import MonomialMatrix, compose, from_permutation

logger = logging.getLogger(__name__)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        for a, b in zip(values, values[1:]):
            if b > a:
                raise PartitionError(f"parts must be weakly decreasing: {values}")
        if any(p <= 0 for p in values):
            raise PartitionError(f"parts must be positive: {values}")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), 0 past the end."""
        return self[i] if i < len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other))

    def removable(self) -> list["Partition"]:
        """Diagrams obtained by removing one corner box."""
        out = []
        for i, p in enumerate(self):
            if p > self.part(i + 1):
                parts = list(self)
                parts[i] -= 1
                out.append(Partition(parts))
        return out

    def addable(self) -> list["Partition"]:
        """Diagrams obtained by adding one box."""
        out = []
        for i in range(len(self) + 1):
            if i == 0 or self.part(i - 1) > self.part(i):
                parts = list(self) + [0]
                parts[i] += 1
                out.append(Partition(parts))
        return out

    def multiplicities(self) -> Counter:
        return Counter(self)

    def literal(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"Partition({self.literal()})"


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse a literal such as ``"[3,1,1]"``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PartitionError(f"cannot parse partition {text!r}: {e}") from None
    if not isinstance(data, list) or not all(isinstance(p, int) for p in data):
        raise PartitionError(f"partition literal must be a list of integers: {text!r}")
    return Partition(data)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in decreasing lexicographic order."""
    if n < 0:
        return ()

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def partitions_up_to(d: int) -> list[Partition]:
    return [p for n in range(d + 1) for p in partitions_of(n)]


def z_rho(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    out = 1
    for k, m in Counter(rho).items():
        out *= k**m * math.factorial(m)
    return out


def class_size(rho: Partition) -> int:
    return math.factorial(rho.size) // z_rho(rho)


# -- characters ---------------------------------------------------------------


@cache
def dim_partition(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook-length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, j in lam.cells():
        hooks *= (lam[i] - j) + (conj[j] - i) - 1
    return math.factorial(lam.size) // hooks


def _beta(lam: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(lam[i] + length - 1 - i if i < len(lam) else length - 1 - i for i in range(length))


def _from_beta(beta: Sequence[int]) -> Partition:
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    return Partition(b - (length - 1 - i) for i, b in enumerate(ordered))


@cache
def _mn(lam: Partition, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    if rho[0] == 1:
        return dim_partition(lam)
    r, rest = rho[0], rho[1:]
    beta = _beta(lam, len(lam))
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        between = sum(1 for c in beads if target < c < b)
        moved = (beads - {b}) | {target}
        total += (-1) ** between * _mn(_from_beta(sorted(moved, reverse=True)), rest)
    return total


def char_value(lam: Partition, rho: Partition) -> int:
    """chi^lam at the class of cycle type rho, by the Murnaghan-Nakayama rule.

    Raises:
        PartitionError: If |lam| != |rho|.
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise PartitionError(f"|{lam}| = {lam.size} but |{rho}| = {rho.size}")
    return _mn(lam, tuple(rho))


def padded(rho: Partition, n: int) -> Partition:
    """rho with n - |rho| parts equal to 1 appended."""
    if n < rho.size:
        raise PartitionError(f"cannot pad {rho} to {n}")
    return Partition(tuple(rho) + (1,) * (n - rho.size))


def multiplicities(
    class_function: Callable[[Partition], Fraction | int], n: int
) -> dict[Partition, Fraction]:
    """Decompose a class function of S(n) over the irreducible characters."""
    out = {}
    for nu in partitions_of(n):
        total = sum(
            Fraction(class_function(rho)) * char_value(nu, rho) / z_rho(rho)
            for rho in partitions_of(n)
        )
        out[nu] = total
    return out


# -- strips and branching -----------------------------------------------------


def bracket(lam: Partition, n: int) -> Partition:
    """lam[n]: insert a part of length n - |lam| (sorted into place)."""
    lam = Partition(lam)
    if n < lam.size:
        raise PartitionError(f"lam[n] needs n >= |lam|, got n={n}, |lam|={lam.size}")
    extra = n - lam.size
    if extra == 0:
        return lam
    return Partition(sorted(tuple(lam) + (extra,), reverse=True))


def horizontal_strips(lam: Partition, n: int) -> list[Partition]:
    """X_n(lam): all nu of size n with nu_1 >= lam_1 >= nu_2 >= lam_2 >= ..."""
    lam = Partition(lam)
    if n <= lam.size:
        raise PartitionError(f"X_n(lam) needs n > |lam|, got n={n}, |lam|={lam.size}")
    ranges = [
        range(lam.part(i + 1), lam.part(i) + 1) for i in range(len(lam))
    ]
    out = []
    for tail in itertools.product(*ranges):
        first = n - sum(tail)
        if first >= lam.part(0):
            out.append(Partition((first,) + tail))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class StripSets:
    x_n: list[Partition]
    bracket: Partition


def strip_sets(lam: Partition, n: int) -> StripSets:
    return StripSets(horizontal_strips(lam, n), bracket(lam, n))


def branch(lam: Partition, direction: str = "down") -> list[Partition]:
    """mu with mu -> lam (down) or lam -> mu (up) in Young's lattice.

    Raises:
        PartitionError: On ``down`` from the empty diagram or an unknown direction.
    """
    lam = Partition(lam)
    if direction == "down":
        if not lam:
            raise PartitionError("cannot remove a box from the empty diagram")
        return lam.removable()
    if direction == "up":
        return lam.addable()
    raise PartitionError(f"unknown direction {direction!r}")


def dimension_ratio(lam: Partition, n: int) -> Fraction:
    """dim lam[n] over the dimension C(n, |lam|)·dim lam of the induced representation."""
    lam = Partition(lam)
    return Fraction(
        dim_partition(bracket(lam, n)), math.comb(n, lam.size) * dim_partition(lam)
    )


# -- standard tableaux ----------------------------------------------------------

Tableau = tuple[tuple[int, ...], ...]


@cache
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """Standard tableaux of shape lam, entries 1..n, in a fixed order."""
    lam = Partition(lam)
    n = lam.size
    if n == 0:
        return ((),)
    out = []
    for i, p in enumerate(lam):
        if p <= lam.part(i + 1):
            continue
        smaller = list(lam)
        smaller[i] -= 1
        for t in standard_tableaux(Partition(smaller)):
            rows = [list(r) for r in t] + [[]] * (len(lam) - len(t))
            rows = [list(r) for r in rows]
            rows[i].append(n)
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def contents(tableau: Tableau) -> dict[int, int]:
    """Map each entry to the content (column - row) of its cell."""
    return {x: j - i for i, row in enumerate(tableau) for j, x in enumerate(row)}


# -- multipartitions ----------------------------------------------------------


@dataclass(frozen=True)
class Multipartition:
    """A partition attached to each irreducible character of G (absent means empty)."""

    group: FiniteGroupTable
    parts: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != self.group.num_characters:
            raise PartitionError(
                f"{self.group.name} has {self.group.num_characters} characters, "
                f"got {len(self.parts)} slots"
            )

    def __hash__(self) -> int:
        return hash((self.group.name, self.parts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multipartition):
            return NotImplemented
        return self.group.name == other.group.name and self.parts == other.parts

    @classmethod
    def from_mapping(
        cls, group: FiniteGroupTable, assignment: Mapping[int, Iterable[int]]
    ) -> "Multipartition":
        parts = [EMPTY] * group.num_characters
        for psi, lam in assignment.items():
            psi = int(psi)
            if not 0 <= psi < group.num_characters:
                raise PartitionError(f"character index {psi} not valid for {group.name}")
            parts[psi] = Partition(lam)
        return cls(group, tuple(parts))

    def __getitem__(self, psi: int) -> Partition:
        return self.parts[psi]

    @property
    def norm(self) -> int:
        return sum(p.size for p in self.parts)

    @property
    def support(self) -> list[int]:
        return [psi for psi, p in enumerate(self.parts) if p]

    def replace(self, psi: int, lam: Partition) -> "Multipartition":
        parts = list(self.parts)
        parts[psi] = Partition(lam)
        return Multipartition(self.group, tuple(parts))

    def literal(self) -> str:
        return json.dumps(
            {str(psi): list(p) for psi, p in enumerate(self.parts) if p},
            separators=(",", ":"),
        )

    def __str__(self) -> str:
        return self.literal()


def parse_multipartition(text: str, group: FiniteGroupTable) -> Multipartition:
    """Parse a literal such as ``'{"0":[2,1],"1":[1]}'``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PartitionError(f"cannot parse multipartition {text!r}: {e}") from None
    if not isinstance(data, dict):
        raise PartitionError("multipartition literal must be a JSON object")
    return Multipartition.from_mapping(group, {int(k): v for k, v in data.items()})


def multipartitions_of(n: int, group: FiniteGroupTable) -> list[Multipartition]:
    """All multipartitions of total size n, slots in character order."""
    r = group.num_characters
    out = []
    for sizes in _compositions(n, r):
        for combo in itertools.product(*(partitions_of(s) for s in sizes)):
            out.append(Multipartition(group, tuple(combo)))
    return out


def multipartitions_up_to(d: int, group: FiniteGroupTable) -> list[Multipartition]:
    return [m for n in range(d + 1) for m in multipartitions_of(n, group)]


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


def wreath_dim(blam: Multipartition) -> int:
    """n!/(n_1!...n_r!) · prod dim nu(i) · (dim phi(i))^{n_i}."""
    n = blam.norm
    out = math.factorial(n)
    for psi, lam in enumerate(blam.parts):
        out //= math.factorial(lam.size)
    for psi, lam in enumerate(blam.parts):
        out *= dim_partition(lam) * blam.group.dims[psi] ** lam.size
    return out


def wreath_bracket(blam: Multipartition, n: int) -> Multipartition:
    """bλ[n]: add a row of length n - ||bλ|| to the trivial-character slot."""
    if n < blam.norm:
        raise PartitionError(f"bλ[n] needs n >= ||bλ||, got n={n}")
    return blam.replace(0, bracket(blam[0], n - blam.norm + blam[0].size))


def wreath_strips(blam: Multipartition, n: int) -> list[Multipartition]:
    """X_n(bλ): interlacing on the trivial slot, other slots unchanged."""
    if n <= blam.norm:
        raise PartitionError(f"X_n(bλ) needs n > ||bλ||, got n={n}")
    target = n - blam.norm + blam[0].size
    return [blam.replace(0, nu) for nu in horizontal_strips(blam[0], target)]


def wreath_branch(blam: Multipartition) -> list[tuple[Multipartition, int]]:
    """Pairs (bμ, dim ψ) with bμ obtained by removing a box from slot ψ."""
    out = []
    for psi, lam in enumerate(blam.parts):
        for mu in lam.removable():
            out.append((blam.replace(psi, mu), blam.group.dims[psi]))
    return out


# -- parabolic subgroups and induced characters ------------------------------------


def block_of(factors: Sequence[int]) -> list[int]:
    """Block index of each position for consecutive blocks of the given sizes."""
    out = []
    for b, size in enumerate(factors):
        out.extend([b] * size)
    return out


def in_parabolic(h: MonomialMatrix, factors: Sequence[int]) -> bool:
    """True if h is a unit mapping every block of positions to itself."""
    blocks = block_of(factors)
    for j, e in enumerate(h.cols):
        if e is None or blocks[e[0]] != blocks[j]:
            return False
    return True


def split_blocks(h: MonomialMatrix, factors: Sequence[int]) -> list[MonomialMatrix]:
    """The diagonal blocks of an element of G(n_1) x ... x G(n_r)."""
    out = []
    offset = 0
    for size in factors:
        cols = tuple(
            (h.cols[offset + j][0] - offset, h.cols[offset + j][1])  # type: ignore[index]
            for j in range(size)
        )
        out.append(MonomialMatrix(size, cols, h.group))
        offset += size
    return out


def shuffle_representatives(
    factors: Sequence[int], group: FiniteGroupTable | None = None
) -> list[MonomialMatrix]:
    """Minimal coset representatives y of S(n)/(S(n_1) x ... x S(n_r)).

    Each y sends the positions of block b, in order, onto a set S_b.
    """
    n = sum(factors)
    reps = []
    for assignment in _block_assignments(list(factors), n):
        perm = [0] * n
        offsets = [sum(factors[:b]) for b in range(len(factors))]
        counters = [0] * len(factors)
        for pos, b in enumerate(assignment):
            perm[offsets[b] + counters[b]] = pos
            counters[b] += 1
        reps.append(from_permutation(perm, group))
    return reps


def _block_assignments(remaining: list[int], n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for b, count in enumerate(remaining):
        if count:
            remaining[b] -= 1
            for rest in _block_assignments(remaining, n - 1):
                yield (b,) + rest
            remaining[b] += 1


def induced_char_value(
    factors: Sequence[int],
    class_function: Callable[[MonomialMatrix], Fraction | int],
    element: MonomialMatrix,
) -> Fraction:
    """Induced character from the parabolic G(n_1) x ... x G(n_r) at ``element``.

    Sums chi0(y^-1 x y) over coset representatives y, with chi0 vanishing
    off the subgroup.

    Raises:
        PartitionError: If the block sizes do not add up to the element's size.
    """
    if sum(factors) != element.size:
        raise PartitionError(
            f"blocks {tuple(factors)} do not partition size {element.size}"
        )
    total = Fraction(0)
    for y in shuffle_representatives(factors, element.group):
        h = compose(compose(y.star(), element), y)
        if in_parabolic(h, factors):
            total += Fraction(class_function(h))
    return total
