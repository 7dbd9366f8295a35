"""Explicit matrix models of irreducible representations.

Exact models hold numpy object arrays of ``Fraction``; the orthogonal
variant holds float64 arrays. Matrices act on column vectors and follow the
monomial-matrix convention, so ``image(a * b) == image(a) @ image(b)``.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import defaultdict
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Literal

import numpy as np

from app.algebra import AlgebraElement
from app.config import get_bounds
from app.errors import (
    GroupMismatchError,
    NonScalarError,
    PartitionError,
    SizeMismatchError,
    VGAlgError,
)
from app.groups import FiniteGroupTable, trivial_group
from app.monomial import MonomialMatrix, adjacent_word, compose, eps
from app.partitions import (
    Multipartition,
    Partition,
    Tableau,
    block_of,
    contents,
    split_blocks,
    shuffle_representatives,
    standard_tableaux,
)
from app.utils.rational import fraction_str

logger = logging.getLogger(__name__)

RepKind = Literal["sym", "sym_orth", "wreath", "rook"]
Variant = Literal["seminormal", "orthogonal"]


def zeros(d: int, exact: bool) -> np.ndarray:
    if exact:
        out = np.empty((d, d), dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros((d, d))


def eye(d: int, exact: bool) -> np.ndarray:
    out = zeros(d, exact)
    for i in range(d):
        out[i, i] = Fraction(1) if exact else 1.0
    return out


def to_array(rows: Sequence[Sequence[Fraction]]) -> np.ndarray:
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = Fraction(x)
    return out


def matrix_to_json(m: np.ndarray, exact: bool) -> list[list]:
    """Rows of ``"p/q"`` strings (exact) or floats."""
    if exact:
        return [[fraction_str(x) for x in row] for row in m]
    return [[float(x) for x in row] for row in m]


def scalar_of(m: np.ndarray, exact: bool, tol: float = 1e-9) -> Fraction | float | None:
    """The c with m == c·I, or None."""
    d = m.shape[0]
    if d == 0:
        return Fraction(0) if exact else 0.0
    c = m[0, 0]
    for i in range(d):
        for j in range(d):
            expected = c if i == j else 0
            if exact:
                if m[i, j] != expected:
                    return None
            elif abs(m[i, j] - expected) > tol:
                return None
    return Fraction(c) if exact else float(c)


class RepModel:
    """A matrix realization with a labelled basis.

    Subclasses provide ``_image`` for single semigroup elements; this class
    handles caching, checks and linear extension.
    """

    kind: RepKind

    def __init__(
        self,
        n: int,
        dim: int,
        labels: list,
        group: FiniteGroupTable,
        exact: bool,
    ):
        get_bounds().check("max_rep_dim", dim)
        self.n = n
        self.dim = dim
        self.labels = labels
        self.group = group
        self.exact = exact
        self._cache: dict[MonomialMatrix, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, dim={self.dim})"

    def _check(self, key: MonomialMatrix | AlgebraElement) -> None:
        if key.size != self.n:
            raise SizeMismatchError(f"element of size {key.size} on a model of size {self.n}")
        if key.group is not self.group and key.group != self.group:
            raise GroupMismatchError(f"groups {key.group.name} and {self.group.name} differ")

    def image(self, key: MonomialMatrix) -> np.ndarray:
        """Matrix of a single semigroup element.

        Raises:
            SizeMismatchError: If the element has another size.
        """
        self._check(key)
        if key not in self._cache:
            self._cache[key] = self._image(key)
        return self._cache[key]

    def _image(self, key: MonomialMatrix) -> np.ndarray:
        raise NotImplementedError

    def trace(self, key: MonomialMatrix) -> Fraction | float:
        t = np.trace(self.image(key))
        return Fraction(t) if self.exact else float(t)

    def apply_algebra(self, x: AlgebraElement) -> np.ndarray:
        """Linear extension of ``image`` to the semigroup algebra."""
        self._check(x)
        out = zeros(self.dim, self.exact)
        for key, coef in x.items():
            out = out + self.image(key) * (coef if self.exact else float(coef))
        return out

    def central_eigenvalue(self, x: AlgebraElement) -> Fraction | float:
        """The scalar by which ``x`` acts.

        Raises:
            NonScalarError: If the image is not a multiple of the identity.
        """
        m = self.apply_algebra(x)
        value = scalar_of(m, self.exact)
        if value is None:
            raise NonScalarError(f"image of {x} on {self!r} is not scalar")
        return value


# -- symmetric group ---------------------------------------------------------------


class SymModel(RepModel):
    """pi^lam of S(n) on standard tableaux: Young's seminormal or orthogonal form."""

    kind: RepKind = "sym"

    def __init__(self, lam: Partition, variant: Variant = "seminormal", group: FiniteGroupTable | None = None):
        lam = Partition(lam)
        get_bounds().check("max_sym_n", lam.size)
        tableaux = list(standard_tableaux(lam))
        super().__init__(lam.size, len(tableaux), tableaux, group or trivial_group(), variant == "seminormal")
        self.lam = lam
        self.variant = variant
        if variant == "orthogonal":
            self.kind = "sym_orth"
        self._index = {t: i for i, t in enumerate(tableaux)}
        self.generators = {j: self._generator(j) for j in range(1, self.n)}

    def _generator(self, j: int) -> dict[int, list[tuple[int, Fraction | float]]]:
        """Sparse columns of the image of s_j: column -> [(row, coefficient)]."""
        columns: dict[int, list[tuple[int, Fraction | float]]] = {}
        for t, col in self._index.items():
            c = contents(t)
            r = c[j + 1] - c[j]
            entries: list[tuple[int, Fraction | float]] = []
            diag = Fraction(1, r)
            entries.append((col, diag if self.exact else float(diag)))
            if abs(r) > 1:
                other = self._index[_swap(t, j)]
                if self.exact:
                    coef = Fraction(1) if r > 0 else 1 - Fraction(1, r * r)
                else:
                    coef = math.sqrt(1 - 1 / (r * r))
                entries.append((other, coef))
            columns[col] = entries
        return columns

    def right_multiply(self, m: np.ndarray, j: int) -> np.ndarray:
        """``m @ image(s_j)`` by sparse column operations."""
        out = zeros(self.dim, self.exact)
        for col, entries in self.generators[j].items():
            acc = None
            for row, coef in entries:
                term = m[:, row] * coef
                acc = term if acc is None else acc + term
            out[:, col] = acc
        return out

    def word_image(self, word: Iterable[int]) -> np.ndarray:
        m = eye(self.dim, self.exact)
        for j in word:
            m = self.right_multiply(m, j)
        return m

    def _image(self, key: MonomialMatrix) -> np.ndarray:
        if not key.is_permutation:
            raise VGAlgError(f"{key} is not a permutation; pi^lam is a representation of S({self.n})")
        return self.word_image(adjacent_word(_one_line(key)))

    def apply_algebra(self, x: AlgebraElement) -> np.ndarray:
        """Horner evaluation over right descents: pi(x) = c_e I + sum_j pi(x_j) pi(s_j)."""
        self._check(x)
        terms: dict[tuple[int, ...], Fraction] = {}
        for key, coef in x.items():
            if not key.is_permutation:
                raise VGAlgError(f"{key} is not a permutation")
            terms[_one_line(key)] = coef
        return self._horner(terms)

    def _horner(self, terms: dict[tuple[int, ...], Fraction]) -> np.ndarray:
        out = zeros(self.dim, self.exact)
        buckets: dict[int, dict[tuple[int, ...], Fraction]] = defaultdict(dict)
        for w, coef in terms.items():
            j = _first_descent(w)
            if j is None:
                c = coef if self.exact else float(coef)
                for i in range(self.dim):
                    out[i, i] = out[i, i] + c
                continue
            shorter = list(w)
            shorter[j], shorter[j + 1] = shorter[j + 1], shorter[j]
            bucket = buckets[j + 1]
            key = tuple(shorter)
            bucket[key] = bucket.get(key, 0) + coef
        for gen in sorted(buckets):
            out = out + self.right_multiply(self._horner(buckets[gen]), gen)
        return out


def _one_line(key: MonomialMatrix) -> tuple[int, ...]:
    return tuple(e[0] for e in key.cols)  # type: ignore[index]


def _first_descent(w: Sequence[int]) -> int | None:
    for j in range(len(w) - 1):
        if w[j] > w[j + 1]:
            return j
    return None


def _swap(t: Tableau, j: int) -> Tableau:
    swap = {j: j + 1, j + 1: j}
    return tuple(tuple(swap.get(x, x) for x in row) for row in t)


def build_sym(lam: Partition, n: int | None = None, variant: Variant = "seminormal") -> SymModel:
    """pi^lam for S(n).

    Raises:
        PartitionError: If |lam| != n.
        BoundExceededError: If n exceeds ``max_sym_n``.
    """
    lam = Partition(lam)
    if n is not None and lam.size != n:
        raise PartitionError(f"|{lam}| = {lam.size} but n = {n}")
    return SymModel(lam, variant)


# -- wreath products ---------------------------------------------------------------------


class _SingleSupportModel:
    """pi^nu tensored with the n-th tensor power of tau^psi, extended to G(n)."""

    def __init__(self, nu: Partition, psi: int, group: FiniteGroupTable):
        self.nu = nu
        self.sym = SymModel(nu)
        self.tau = [to_array(m) for m in group.irrep_matrices(psi)]
        self.d = group.dims[psi]
        self.n = nu.size
        self.group = group
        self.dim = self.sym.dim * self.d**self.n

    def image(self, h: MonomialMatrix) -> np.ndarray:
        n, d = self.n, self.d
        perm = _one_line(h)
        row_labels = [0] * n
        for j, (i, g) in enumerate(h.cols):  # type: ignore[misc]
            row_labels[i] = g
        sym_part = self.sym.word_image(adjacent_word(perm))
        if n == 0:
            return sym_part
        labels = np.ones((1, 1), dtype=object)
        for i in range(n):
            labels = np.kron(labels, self.tau[row_labels[i]])
        factors = zeros(d**n, True)
        shape = (d,) * n
        for src in itertools.product(range(d), repeat=n):
            dst = [0] * n
            for j in range(n):
                dst[perm[j]] = src[j]
            factors[np.ravel_multi_index(dst, shape), np.ravel_multi_index(src, shape)] = Fraction(1)
        return np.kron(sym_part, labels.dot(factors))


class WreathModel(RepModel):
    """pi^bλ of G(n): induced from the parabolic G(n_1) x ... x G(n_r) over the support."""

    kind: RepKind = "wreath"

    def __init__(self, blam: Multipartition):
        group = blam.group
        n = blam.norm
        get_bounds().check("max_group_elements", group.order**n * math.factorial(n))
        self.blam = blam
        self.support = blam.support
        self.factors = [blam[psi].size for psi in self.support]
        self.blocks = [_SingleSupportModel(blam[psi], psi, group) for psi in self.support]
        self.cosets = shuffle_representatives(self.factors, group)
        self.inner_dim = math.prod(b.dim for b in self.blocks)
        self._coset_index = {_assignment(y, self.factors): i for i, y in enumerate(self.cosets)}
        labels = [(c, v) for c in range(len(self.cosets)) for v in range(self.inner_dim)]
        super().__init__(n, len(labels), labels, group, True)

    def inner_image(self, h: MonomialMatrix) -> np.ndarray:
        out = np.ones((1, 1), dtype=object)
        for block, part in zip(self.blocks, split_blocks(h, self.factors)):
            out = np.kron(out, block.image(part))
        return out

    def _image(self, key: MonomialMatrix) -> np.ndarray:
        if not key.is_unit:
            raise VGAlgError(f"{key} is not in G({self.n})")
        out = zeros(self.dim, True)
        d = self.inner_dim
        for c, y in enumerate(self.cosets):
            xy = compose(key, y)
            target = self._coset_index[_assignment(xy, self.factors)]
            h = compose(self.cosets[target].star(), xy)
            out[target * d : (target + 1) * d, c * d : (c + 1) * d] = self.inner_image(h)
        return out


def _assignment(x: MonomialMatrix, factors: Sequence[int]) -> tuple[int, ...]:
    """Block of each position after applying x to the consecutive blocks."""
    blocks = block_of(factors)
    out = [0] * x.size
    for j, e in enumerate(x.cols):
        out[e[0]] = blocks[j]  # type: ignore[index]
    return tuple(out)


def build_wreath(blam: Multipartition, n: int | None = None) -> WreathModel:
    """pi^bλ for G(n).

    Raises:
        PartitionError: If ||bλ|| != n.
    """
    if n is not None and blam.norm != n:
        raise PartitionError(f"||{blam}|| = {blam.norm} but n = {n}")
    return WreathModel(blam)


# -- rook monoids --------------------------------------------------------------------------


class RookModel(RepModel):
    """T^λ_n of Gamma(n, G): basis (A, v) with A an l-subset of 1..n."""

    kind: RepKind = "rook"

    def __init__(self, inner: RepModel, n: int):
        ell = inner.n
        if ell > n:
            raise PartitionError(f"rook model needs l <= n, got l={ell}, n={n}")
        self.inner = inner
        self.ell = ell
        self.subsets = list(itertools.combinations(range(n), ell))
        self._subset_index = {a: i for i, a in enumerate(self.subsets)}
        labels = [
            (tuple(p + 1 for p in a), v) for a in self.subsets for v in range(inner.dim)
        ]
        super().__init__(n, len(labels), labels, inner.group, inner.exact)

    def _image(self, key: MonomialMatrix) -> np.ndarray:
        out = zeros(self.dim, self.exact)
        d = self.inner.dim
        rows = key.rows
        for a_idx, a in enumerate(self.subsets):
            hits = [rows.get(p) for p in a]
            if any(h is None for h in hits):
                continue
            cols = sorted(h[0] for h in hits)  # type: ignore[index]
            rank = {c: r for r, c in enumerate(cols)}
            h_cols: list = [None] * self.ell
            for q, (c, g) in enumerate(hits):  # type: ignore[misc]
                h_cols[rank[c]] = (q, g)
            h = MonomialMatrix(self.ell, tuple(h_cols), self.group)
            b_idx = self._subset_index[tuple(cols)]
            out[a_idx * d : (a_idx + 1) * d, b_idx * d : (b_idx + 1) * d] = self.inner.image(h)
        return out

    def compression(self, r: int) -> np.ndarray:
        """P_r = T(eps_{r+1..n}): projection onto the vectors with support inside 1..r."""
        if not 0 <= r <= self.n:
            raise VGAlgError(f"compression level {r} outside 0..{self.n}")
        return self.image(eps(range(r + 1, self.n + 1), self.n, self.group))


def build_rook(
    target: Partition | Multipartition,
    n: int,
    group: FiniteGroupTable | None = None,
    variant: Variant = "seminormal",
) -> RookModel:
    """T^λ_n (partition, trivial G) or T^bλ_n (multipartition over G).

    Raises:
        PartitionError: If |λ| > n.
        BoundExceededError: If the model is too large.
    """
    if isinstance(target, Multipartition):
        if target.group.is_trivial:
            inner: RepModel = SymModel(target[0], variant)
        else:
            if variant != "seminormal":
                raise VGAlgError("the orthogonal variant exists for trivial G only")
            inner = WreathModel(target)
    else:
        if group is not None and not group.is_trivial:
            raise PartitionError(f"a partition indexes T^λ_n over the trivial group, not {group.name}")
        inner = SymModel(Partition(target), variant)
    if inner.n > n:
        raise PartitionError(f"rook model needs l <= n, got l={inner.n}, n={n}")
    get_bounds().check("max_rep_dim", math.comb(n, inner.n) * inner.dim)
    return RookModel(inner, n)
