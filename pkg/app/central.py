"""Distinguished element families of the semigroup algebras and the lift from shifted functions."""

from __future__ import annotations

import itertools
import json
import logging
import math
import re
from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict

from app.algebra import AlgebraElement, eps_bar_product, multiply
from app.errors import ParseError, VGAlgError
from app.groups import FiniteGroupTable, trivial_group
from app.monomial import Entry, MonomialMatrix, compose, cycle
from app.partitions import Multipartition, Partition
from app.shifted import (
    ShiftedFunction,
    eval_psharp,
    express_in_psharp,
    frakp,
    parse_shifted,
)

logger = logging.getLogger(__name__)

ClassFunction = list[Fraction]


# -- class functions ------------------------------------------------------------


def phi_for_character(group: FiniteGroupTable, psi: int, k: int) -> ClassFunction:
    """(dim psi / |G|)^k times the conjugate of psi, as values per class."""
    if not 0 <= psi < group.num_characters:
        raise VGAlgError(f"{group.name}: no character with index {psi}")
    scale = Fraction(group.dims[psi], group.order) ** k
    return [scale * group.character(psi, group.inv[members[0]]) for members in group.classes]


def phi_identity(group: FiniteGroupTable) -> ClassFunction:
    """Indicator of the identity element."""
    return [Fraction(1 if c == 0 else 0) for c in range(len(group.classes))]


def class_inner_product(group: FiniteGroupTable, phi: Sequence[Fraction], psi: int) -> Fraction:
    """|G|^-1 sum_g phi(g) psi(g)."""
    total = sum(
        (Fraction(len(members)) * phi[c] * group.char_table[psi][c] for c, members in enumerate(group.classes)),
        Fraction(0),
    )
    return total / group.order


# -- weighted cycle sums ------------------------------------------------------------


def labelled_cycle(
    points: Sequence[int], labels: Sequence[int], n: int, group: FiniteGroupTable
) -> MonomialMatrix:
    """g_1^(i_1)...g_k^(i_k) composed with the cycle (i_1,...,i_k)."""
    diag: list[Entry] = [(j, 0) for j in range(n)]
    for p, g in zip(points, labels):
        diag[p - 1] = (p - 1, g)
    return compose(MonomialMatrix(n, tuple(diag), group), cycle(points, n, group))


def _cycle_sum(
    k: int,
    n: int,
    group: FiniteGroupTable,
    weight: Callable[[int], Fraction],
    with_eps_bar: bool,
) -> AlgebraElement:
    """sum over k-tuples of distinct points and of labels of
    weight(g_k...g_1) g_1^(i_1)...g_k^(i_k) (i_1,...,i_k) [eps_bar_{i_1}...eps_bar_{i_k}]."""
    if k < 1:
        raise VGAlgError(f"k must be >= 1, got {k}")
    acc: dict[MonomialMatrix, Fraction] = {}

    def add(key: MonomialMatrix, coef: Fraction) -> None:
        value = acc.get(key, 0) + coef
        if value == 0:
            acc.pop(key, None)
        else:
            acc[key] = value

    for points in itertools.permutations(range(1, n + 1), k):
        bar = eps_bar_product(points, n, group) if with_eps_bar else None
        for labels in itertools.product(range(group.order), repeat=k):
            x = 0
            for g in labels:
                x = group.mult[g][x]
            w = weight(x)
            if w == 0:
                continue
            key = labelled_cycle(points, labels, n, group)
            if bar is None:
                add(key, w)
            else:
                for e, sign in bar.items():
                    add(compose(key, e), w * sign)
    return AlgebraElement._raw(n, acc, group)


def build_z(k: int, n: int) -> AlgebraElement:
    """z^(k)_n: sum over ordered k-tuples of distinct indices of the k-cycle; 0 for n < k."""
    return _cycle_sum(k, n, trivial_group(), lambda x: Fraction(1), False)


def build_z_psi(k: int, psi: int, n: int, group: FiniteGroupTable) -> AlgebraElement:
    """z^(k,psi)_n in the group algebra of G(n); 0 for n < k."""
    phi = phi_for_character(group, psi, k)
    return _cycle_sum(k, n, group, lambda x: group.class_function_value(phi, x), False)


def build_delta(
    k: int,
    n: int,
    group: FiniteGroupTable | None = None,
    phi: Sequence[Fraction] | None = None,
) -> AlgebraElement:
    """Delta^(k)_n (trivial G) or Delta_n(k, phi); 0 for n < k.

    Raises:
        VGAlgError: If G is nontrivial and no class function is given, or
            the class function has the wrong length.
    """
    group = group or trivial_group()
    if phi is None:
        if not group.is_trivial:
            raise VGAlgError(f"Delta over {group.name} needs a class function")
        phi = [Fraction(1)]
    if len(phi) != len(group.classes):
        raise VGAlgError(
            f"class function has {len(phi)} values, {group.name} has {len(group.classes)} classes"
        )
    values = [Fraction(v) for v in phi]
    return _cycle_sum(k, n, group, lambda x: group.class_function_value(values, x), True)


def build_u(i: int, n: int, group: FiniteGroupTable | None = None) -> AlgebraElement:
    """u_{i|n}(G) = sum_{j>i} sum_g g^(i) (g^-1)^(j) (i,j) eps_bar_i eps_bar_j; 0 for n <= i."""
    group = group or trivial_group()
    if i < 1:
        raise VGAlgError(f"u_i needs i >= 1, got {i}")
    total = AlgebraElement.zero(n, group)
    for j in range(i + 1, n + 1):
        bar = eps_bar_product((i, j), n, group)
        terms = [
            (labelled_cycle((i, j), (g, group.inv[g]), n, group), Fraction(1))
            for g in range(group.order)
        ]
        total = total + multiply(AlgebraElement(n, terms, group), bar)
    return total


# -- lifting --------------------------------------------------------------------------


def lift(
    f: ShiftedFunction, n: int, group: FiniteGroupTable | None = None
) -> AlgebraElement:
    """c_n(f): substitute z^(k)_n (resp. z^(k,psi)_n) for p#_k (resp. p#_{k,psi}).

    Raises:
        SolverError: If f has no p# expansion within its degree bound.
    """
    group = group or trivial_group()
    poly = express_in_psharp(f, group)
    cache: dict[object, AlgebraElement] = {}

    def generator(g: int | tuple[int, int]) -> AlgebraElement:
        if g not in cache:
            if isinstance(g, int):
                cache[g] = build_z(g, n)
            else:
                cache[g] = build_z_psi(g[0], g[1], n, group)
        return cache[g]

    total = AlgebraElement.zero(n, group)
    for mono, coef in poly.terms.items():
        term = AlgebraElement.scalar(coef, n, group)
        for g in mono:
            term = multiply(term, generator(g))
        total = total + term
    logger.debug("lifted %s to size %d: %d terms", f, n, len(total))
    return total


def alpha_terms(k: int, n: int, group: FiniteGroupTable | None = None) -> list[tuple[Fraction, ShiftedFunction]]:
    """The pairs ((-1)^i C(k,i) n^-i, frakp_{k+i}) for i = 0..k.

    Over a nontrivial group the frakp functions act on the trivial-character slot.
    """
    psi = None if group is None or group.is_trivial else 0
    return [
        (Fraction((-1) ** i * math.comb(k, i), n**i), frakp(k + i, psi))
        for i in range(k + 1)
    ]


def build_alpha(k: int, n: int, group: FiniteGroupTable | None = None) -> AlgebraElement:
    """alpha_{k,n} = sum_i (-1)^i C(k,i) n^-i c_n(frakp_{k+i})."""
    group = group or trivial_group()
    total = AlgebraElement.zero(n, group)
    for coef, f in alpha_terms(k, n, group):
        total = total + lift(f, n, group).scale(coef)
    return total


def delta_eigenvalue(k: int, phi: Sequence[Fraction], target: Partition | Multipartition) -> Fraction:
    """Eigenvalue of Delta(k, phi) on the representation indexed by ``target``.

    sum_psi (|G|/dim psi)^k <phi, psi> p#_k(target(psi)).
    """
    if isinstance(target, Partition):
        return Fraction(phi[0]) * eval_psharp(Partition([k]), target)
    group = target.group
    total = Fraction(0)
    for psi in range(group.num_characters):
        weight = Fraction(group.order, group.dims[psi]) ** k * class_inner_product(group, phi, psi)
        if weight:
            total += weight * eval_psharp(Partition([k]), target[psi])
    return total


# -- family tags --------------------------------------------------------------------------

FamilyKind = Literal["z", "zpsi", "delta", "u", "alpha", "lift"]


class FamilyTag(BaseModel):
    """A named element family, as written on the command line.

    ``phi`` for delta is ``"id"`` (indicator of the identity), ``"chi<psi>"``
    for (dim psi/|G|)^k psi-bar, or a JSON list of values per class.
    """

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    k: int | None = None
    i: int | None = None
    psi: int | None = None
    phi: str | None = None
    f: str | None = None

    def class_function(self, group: FiniteGroupTable) -> ClassFunction | None:
        if self.phi is None:
            return None if group.is_trivial else phi_for_character(group, 0, self.k or 1)
        if self.phi == "id":
            return phi_identity(group)
        m = re.fullmatch(r"chi(\d+)", self.phi)
        if m:
            return phi_for_character(group, int(m.group(1)), self.k or 1)
        try:
            values = json.loads(self.phi)
            return [Fraction(str(v)) for v in values]
        except (json.JSONDecodeError, TypeError, ValueError):
            raise ParseError(f"cannot parse class function {self.phi!r}") from None

    def build(self, n: int, group: FiniteGroupTable | None = None) -> AlgebraElement:
        group = group or trivial_group()
        if self.kind == "z":
            return build_z(self.k, n)  # type: ignore[arg-type]
        if self.kind == "zpsi":
            return build_z_psi(self.k, self.psi, n, group)  # type: ignore[arg-type]
        if self.kind == "delta":
            return build_delta(self.k, n, group, self.class_function(group))  # type: ignore[arg-type]
        if self.kind == "u":
            return build_u(self.i, n, group)  # type: ignore[arg-type]
        if self.kind == "alpha":
            return build_alpha(self.k, n, group)  # type: ignore[arg-type]
        return lift(parse_shifted(self.f), n, group)  # type: ignore[arg-type]

    def __str__(self) -> str:
        if self.kind == "lift":
            return f"lift({self.f})"
        if self.kind == "zpsi":
            return f"zpsi({self.k},{self.psi})"
        if self.kind == "u":
            return f"u({self.i})"
        if self.kind == "delta" and self.phi is not None:
            return f"delta({self.k},{self.phi})"
        return f"{self.kind}({self.k})"


_FAMILY = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$", re.S)


def parse_family(text: str) -> FamilyTag:
    """Parse ``z(k)``, ``zpsi(k,psi)``, ``delta(k[,phi])``, ``u(i)``, ``alpha(k)``, ``lift(f)``.

    Raises:
        ParseError: On unknown names or malformed arguments.
    """
    m = _FAMILY.match(text)
    if not m:
        raise ParseError(f"cannot parse family {text!r}")
    name, args = m.group(1), m.group(2).strip()
    try:
        if name == "lift":
            return FamilyTag(kind="lift", f=args)
        if name == "delta":
            head, _, rest = args.partition(",")
            return FamilyTag(kind="delta", k=int(head), phi=rest.strip() or None)
        parts = [int(a) for a in args.split(",")]
        if name == "zpsi" and len(parts) == 2:
            return FamilyTag(kind="zpsi", k=parts[0], psi=parts[1])
        if name == "u" and len(parts) == 1:
            return FamilyTag(kind="u", i=parts[0])
        if name in ("z", "alpha") and len(parts) == 1:
            return FamilyTag(kind=name, k=parts[0])  # type: ignore[arg-type]
    except ValueError:
        pass
    raise ParseError(f"cannot parse family {text!r}")
