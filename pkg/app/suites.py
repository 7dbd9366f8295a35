"""Verification suites behind the CLI commands.

Every suite computes both sides of a family of identities exactly and
returns a ``SuiteResult``. A failed identity is data: it flips ``passed``
and the first failure is kept as the counterexample.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Callable, Iterable
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from app.algebra import (
    AlgebraElement,
    CentralizerSpec,
    eps_bar_product,
    is_in_centralizer,
)
from app.central import (
    build_alpha,
    build_delta,
    build_u,
    build_z,
    build_z_psi,
    delta_eigenvalue,
    labelled_cycle,
    phi_for_character,
    phi_identity,
)
from app.config import get_bounds
from app.errors import BoundExceededError, ConfigError, PartitionError
from app.groups import FiniteGroupTable, trivial_group
from app.monomial import (
    MonomialMatrix,
    adjacent,
    enumerate_elements,
    eps,
    from_permutation,
    gamma_order,
    label,
)
from app.partitions import (
    Multipartition,
    Partition,
    bracket,
    char_value,
    dim_partition,
    dimension_ratio,
    horizontal_strips,
    multipartitions_of,
    multipartitions_up_to,
    multiplicities,
    partitions_of,
    partitions_up_to,
    wreath_bracket,
    wreath_branch,
    wreath_dim,
    wreath_strips,
)
from app.reps import RepModel, build_rook, build_sym, build_wreath
from app.shifted import eval_psharp, eval_sstar
from app.utils.rational import fraction_str

logger = logging.getLogger(__name__)

MAX_RELATION_INDEX = 4


class SuiteResult(BaseModel):
    """Outcome of one suite: table rows, overall verdict, first counterexample."""

    name: str
    passed: bool = True
    rows: list[dict[str, Any]] = Field(default_factory=list)
    counterexample: dict[str, Any] | None = None
    extra: dict[str, Any] = Field(default_factory=dict)

    def record(self, row: dict[str, Any], ok: bool) -> None:
        self.rows.append(row)
        if not ok:
            self.fail(row)

    def fail(self, detail: dict[str, Any]) -> None:
        if self.passed:
            logger.info("%s: first failure %s", self.name, detail)
            self.counterexample = detail
        self.passed = False


def _value(x: Fraction | float | int) -> str | float:
    return x if isinstance(x, float) else fraction_str(Fraction(x))


def class_representative(rho: Partition, group: FiniteGroupTable | None = None) -> MonomialMatrix:
    """A permutation of cycle type rho, cycles on consecutive points."""
    perm: list[int] = []
    start = 0
    for length in rho:
        perm.extend(start + (t + 1) % length for t in range(length))
        start += length
    return from_permutation(perm, group)


# -- eigenvalue tables ------------------------------------------------------------------


def eigentable(
    n: int, k: int | None = None, group: FiniteGroupTable | None = None, psi: int | None = None
) -> SuiteResult:
    """Eigenvalues of z^(k)_n (resp. z^(k,psi)_n) on every irreducible against p#_k.

    Args:
        n: Size of the symmetric or wreath group.
        k: A single cycle length; all 1..n when None.
        group: Nontrivial G switches to the wreath table.
        psi: A single character of G; all of them when None.

    Raises:
        ConfigError: If psi is given for the trivial group or is out of range.
    """
    group = group or trivial_group()
    ks = [k] if k is not None else list(range(1, n + 1))
    if psi is not None and (group.is_trivial or not 0 <= psi < group.num_characters):
        raise ConfigError(f"--psi must index a character of a nontrivial group, got {psi} for {group.name}")
    psis = [psi] if psi is not None else list(range(group.num_characters))
    result = SuiteResult(name="eigentable")
    if group.is_trivial:
        elements = {j: build_z(j, n) for j in ks}
        for lam in partitions_of(n):
            model = build_sym(lam, n)
            for j in ks:
                value = model.central_eigenvalue(elements[j])
                expected = eval_psharp(Partition([j]), lam)
                result.record(
                    {"lambda": lam.literal(), "k": j, "eigenvalue": _value(value),
                     "psharp": _value(expected), "match": value == expected},
                    value == expected,
                )
        return result

    zpsi = {(j, c): build_z_psi(j, c, n, group) for j in ks for c in psis}
    for blam in multipartitions_of(n, group):
        model = build_wreath(blam, n)
        for j in ks:
            for c in psis:
                value = model.central_eigenvalue(zpsi[j, c])
                expected = eval_psharp(Partition([j]), blam[c])
                result.record(
                    {"lambda": blam.literal(), "k": j, "psi": c, "eigenvalue": _value(value),
                     "psharp": _value(expected), "match": value == expected},
                    value == expected,
                )
    return result


def delta_table(
    n: int, k: int | None = None, group: FiniteGroupTable | None = None
) -> SuiteResult:
    """Eigenvalues of Delta^(k)_n (resp. Delta_n(k, phi)) on every rook model T_n.

    Over a nontrivial group phi runs over (dim psi/|G|)^k psi-bar, with expected
    value p#_k(bλ(psi)), and over the identity indicator, checked against
    the closed form of ``delta_eigenvalue``.
    """
    group = group or trivial_group()
    ks = [k] if k is not None else list(range(1, n + 1))
    result = SuiteResult(name="delta-table")
    if group.is_trivial:
        deltas = {j: build_delta(j, n) for j in ks}
        for lam in partitions_up_to(n):
            model = build_rook(lam, n)
            for j in ks:
                value = model.central_eigenvalue(deltas[j])
                expected = eval_psharp(Partition([j]), lam)
                result.record(
                    {"lambda": lam.literal(), "k": j, "phi": "1", "eigenvalue": _value(value),
                     "expected": _value(expected), "match": value == expected},
                    value == expected,
                )
        return result

    for j in ks:
        phis: list[tuple[str, list[Fraction], Callable[[Multipartition], Fraction]]] = []
        for psi in range(group.num_characters):
            phis.append((
                f"chi{psi}",
                phi_for_character(group, psi, j),
                lambda blam, psi=psi, j=j: eval_psharp(Partition([j]), blam[psi]),
            ))
        ident = phi_identity(group)
        phis.append(("id", ident, lambda blam, j=j, ident=ident: delta_eigenvalue(j, ident, blam)))
        for tag, phi, expect in phis:
            element = build_delta(j, n, group, phi)
            for blam in multipartitions_up_to(n, group):
                model = build_rook(blam, n, group)
                value = model.central_eigenvalue(element)
                expected = expect(blam)
                result.record(
                    {"lambda": blam.literal(), "k": j, "phi": tag, "eigenvalue": _value(value),
                     "expected": _value(expected), "match": value == expected},
                    value == expected,
                )
    return result


# -- relation suites -------------------------------------------------------------------------

Relation = tuple[str, AlgebraElement, AlgebraElement]


def _of(key: MonomialMatrix) -> AlgebraElement:
    return AlgebraElement.of(key)


def rook_relations(n: int, group: FiniteGroupTable | None = None) -> list[Relation]:
    """Idempotent, commutation and Coxeter relations among s_i and eps_i in Gamma(n)."""
    group = group or trivial_group()
    top = min(n, MAX_RELATION_INDEX + 1)
    s = {i: _of(adjacent(i, n, group)) for i in range(1, top)}
    e = {i: _of(eps([i], n, group)) for i in range(1, top + 1)}
    one = AlgebraElement.one(n, group)
    out: list[Relation] = []
    for i in e:
        out.append((f"eps{i}^2 = eps{i}", e[i] * e[i], e[i]))
        for j in e:
            if j > i:
                out.append((f"eps{i} eps{j} = eps{j} eps{i}", e[i] * e[j], e[j] * e[i]))
    for i in s:
        out.append((f"s{i}^2 = 1", s[i] * s[i], one))
        out.append((f"s{i} eps{i} = eps{i+1} s{i}", s[i] * e[i], e[i + 1] * s[i]))
        out.append((f"s{i} eps{i} eps{i+1} = eps{i} eps{i+1}", s[i] * e[i] * e[i + 1], e[i] * e[i + 1]))
        for j in s:
            if j == i + 1:
                out.append((
                    f"s{i} s{j} s{i} = s{j} s{i} s{j}",
                    s[i] * s[j] * s[i],
                    s[j] * s[i] * s[j],
                ))
            elif j > i + 1:
                out.append((f"s{i} s{j} = s{j} s{i}", s[i] * s[j], s[j] * s[i]))
    return out


def _label_swap_sum(k: int, n: int, group: FiniteGroupTable) -> AlgebraElement:
    """sum_g g^(k) (g^-1)^(k+1) eps_bar_k eps_bar_(k+1)."""
    total = AlgebraElement.zero(n, group)
    for g in range(group.order):
        h = _of(label(g, k, n, group)) * _of(label(group.inv[g], k + 1, n, group))
        total = total + h
    return total * eps_bar_product((k, k + 1), n, group)


def hecke_relations(n: int, group: FiniteGroupTable | None = None) -> list[Relation]:
    """Commutation relations between s_k, eps_k, labels and u_k(G) in A(n, G)."""
    group = group or trivial_group()
    top = min(n - 1, MAX_RELATION_INDEX)
    u = {i: build_u(i, n, group) for i in range(1, top + 2) if i <= n}
    s = {i: _of(adjacent(i, n, group)) for i in range(1, top + 1)}
    e = {i: _of(eps([i], n, group)) for i in range(1, top + 1)}
    zero = AlgebraElement.zero(n, group)
    out: list[Relation] = []
    for k in range(1, top + 1):
        out.append((
            f"s{k} u{k} = u{k+1} s{k} + sum_g g^({k}) g^-1^({k+1}) ebar{k} ebar{k+1}",
            s[k] * u[k],
            u[k + 1] * s[k] + _label_swap_sum(k, n, group),
        ))
        out.append((f"eps{k} u{k} = 0", e[k] * u[k], zero))
        out.append((f"u{k} eps{k} = 0", u[k] * e[k], zero))
        for l in range(1, top + 1):
            if l != k:
                out.append((f"eps{l} u{k} = u{k} eps{l}", e[l] * u[k], u[k] * e[l]))
            if l not in (k, k + 1):
                out.append((f"s{k} u{l} = u{l} s{k}", s[k] * u[l], u[l] * s[k]))
            if l > k:
                out.append((f"u{k} u{l} = u{l} u{k}", u[k] * u[l], u[l] * u[k]))
        if not group.is_trivial:
            for slot in range(1, top + 1):
                for g in group.generators:
                    h = _of(label(g, slot, n, group))
                    out.append((f"g{g}^({slot}) u{k} = u{k} g{g}^({slot})", h * u[k], u[k] * h))
    return out


def verify_relations(n: int, group: FiniteGroupTable | None = None) -> SuiteResult:
    """Check the rook-monoid presentation and the Hecke-type relations at size n."""
    group = group or trivial_group()
    result = SuiteResult(name="verify-hecke")
    for family, relations in (("rook", rook_relations(n, group)), ("hecke", hecke_relations(n, group))):
        for name, lhs, rhs in relations:
            ok = lhs == rhs
            row: dict[str, Any] = {"family": family, "relation": name, "n": n, "match": ok}
            result.rows.append(row)
            if not ok:
                result.fail({**row, "difference": str(lhs - rhs)})
    result.extra["group"] = group.name
    return result


# -- central elements -------------------------------------------------------------------------------


def _check_element(
    result: SuiteResult, check: str, params: str, ok: bool, witness: str | None = None
) -> None:
    row = {"check": check, "params": params, "match": ok}
    result.rows.append(row)
    if not ok:
        result.fail({**row, "witness": witness})


def _central(
    result: SuiteResult, x: AlgebraElement, flavor: str, params: str
) -> None:
    outcome = is_in_centralizer(x, CentralizerSpec(m=0, flavor=flavor))  # type: ignore[arg-type]
    witness = None if outcome else f"[{outcome.generator}, x] = {outcome.commutator}"
    _check_element(result, f"central ({flavor})", params, bool(outcome), witness)


def verify_central(
    n: int, k_max: int = 3, group: FiniteGroupTable | None = None
) -> SuiteResult:
    """Centrality, truncation consistency and shift identities of the element families."""
    group = group or trivial_group()
    result = SuiteResult(name="verify-central")
    ks = range(1, min(k_max, n) + 1)
    trivial = group.is_trivial
    phis = {"1": [Fraction(1)]} if trivial else {
        **{f"chi{psi}": None for psi in range(group.num_characters)},
        "id": phi_identity(group),
    }

    def phi_of(tag: str, k: int) -> list[Fraction]:
        if tag.startswith("chi"):
            return phi_for_character(group, int(tag[3:]), k)
        return phis[tag]  # type: ignore[return-value]

    for k in ks:
        if trivial:
            z = build_z(k, n)
            _central(result, z, "group", f"z({k}), n={n}")
            if k >= 2:
                _check_element(result, "degree", f"z({k}), n={n}", z.degree == k, str(z.degree))
        else:
            for psi in range(group.num_characters):
                _central(result, build_z_psi(k, psi, n, group), "group", f"zpsi({k},{psi}), n={n}")
        for tag in phis:
            phi = phi_of(tag, k)
            delta = build_delta(k, n, group, phi)
            _central(result, delta, "semigroup", f"delta({k},{tag}), n={n}")
            _check_element(result, "degree", f"delta({k},{tag}), n={n}", delta.degree <= k, str(delta.degree))
            if n >= 2:
                lower = build_delta(k, n - 1, group, phi)
                _check_element(
                    result, "truncation", f"delta({k},{tag}), n={n}",
                    delta.truncate(n - 1) == lower, str(delta.truncate(n - 1) - lower),
                )
    if trivial:
        _central(result, build_alpha(1, n), "group", f"alpha(1), n={n}")

    for i in range(1, n):
        u = build_u(i, n, group)
        if n >= 2:
            lower = build_u(i, n - 1, group)
            _check_element(
                result, "truncation", f"u({i}), n={n}",
                u.truncate(n - 1) == lower, str(u.truncate(n - 1) - lower),
            )
        _check_element(result, "degree", f"u({i}), n={n}", u.degree <= 2, str(u.degree))

    # 2 u_i = xi^(i-1) Delta(2, phi_1) - xi^i Delta(2, phi_1) at size n
    ident = phis["1"] if trivial else phis["id"]
    for i in range(1, min(n, 3)):
        upper = build_delta(2, n - i + 1, group, ident)
        lower = build_delta(2, n - i, group, ident)
        for _ in range(i - 1):
            upper = upper.shift()
        for _ in range(i):
            lower = lower.shift()
        lhs = upper - lower
        rhs = build_u(i, n, group).scale(2)
        _check_element(result, "shift", f"2u({i}) = xi^{i-1}(delta2) - xi^{i}(delta2), n={n}",
                       lhs == rhs, str(lhs - rhs))

    for k in range(1, min(n, 3) + 1):
        _labelled_eps_bar(result, k, n, group)
    result.extra["group"] = group.name
    return result


def _labelled_eps_bar(result: SuiteResult, k: int, n: int, group: FiniteGroupTable) -> None:
    """Labelled k-cycles commute with the eps_bar product over their support."""
    for points in itertools.permutations(range(1, n + 1), k):
        bar = eps_bar_product(points, n, group)
        for labels in itertools.product(range(group.order), repeat=k):
            g = AlgebraElement.of(labelled_cycle(points, labels, n, group))
            comm = g * bar - bar * g
            if not comm.is_zero:
                _check_element(result, "label/eps_bar", f"{points} {labels}, n={n}", False, str(comm))
                return
    _check_element(result, "label/eps_bar", f"k={k}, n={n}", True)


# -- dimensions and spectra --------------------------------------------------------------------------


def dim_identity(n: int, group: FiniteGroupTable | None = None) -> SuiteResult:
    """sum (C(n,l) dim)^2 over irreducibles of Gamma(n, G) against the count of Gamma(n, G)."""
    group = group or trivial_group()
    result = SuiteResult(name="dim-identity")
    left = 0
    for ell in range(n + 1):
        if group.is_trivial:
            dims = [dim_partition(lam) for lam in partitions_of(ell)]
        else:
            dims = [wreath_dim(blam) for blam in multipartitions_of(ell, group)]
        part = sum((math.comb(n, ell) * d) ** 2 for d in dims)
        orbit = math.comb(n, ell) ** 2 * math.factorial(ell) * group.order**ell
        left += part
        result.record(
            {"ell": ell, "irreducibles": part, "matrices": orbit, "match": part == orbit},
            part == orbit,
        )
    order = gamma_order(n, group)
    result.extra.update({"left": left, "right": order, "group": group.name})
    if left != order:
        result.fail({"left": left, "right": order})
    bounds = get_bounds()
    if n > bounds.max_gamma_n or order > bounds.max_group_elements:
        result.extra["enumerated"] = None
        return result
    count = sum(1 for _ in enumerate_elements("Gamma", n, group))
    result.extra["enumerated"] = count
    if count != order:
        result.fail({"right": order, "enumerated": count})
    return result


def spectrum(lam: Partition, n: int) -> SuiteResult:
    """Decomposition of T^λ_n restricted to S(n) by exact traces on class representatives."""
    lam = Partition(lam)
    result = SuiteResult(name="spectrum")
    model = build_rook(lam, n)
    expected = horizontal_strips(lam, n) if n > lam.size else [lam]
    traces = {rho: model.trace(class_representative(rho)) for rho in partitions_of(n)}
    for rho, value in traces.items():
        target = sum((char_value(nu, rho) for nu in expected), 0)
        result.record(
            {"kind": "trace", "index": rho.literal(), "value": _value(value),
             "expected": _value(target), "match": value == target},
            value == target,
        )
    mult = multiplicities(lambda rho: traces[rho], n)
    for nu, m in mult.items():
        want = 1 if nu in expected else 0
        result.record(
            {"kind": "multiplicity", "index": nu.literal(), "value": _value(m),
             "expected": want, "match": m == want},
            m == want,
        )
        if m and not lam.contains(Partition(nu[1:])):
            result.fail({"kind": "support", "index": nu.literal()})
    grown = bracket(lam, n)
    result.extra.update({
        "bracket": grown.literal(),
        "bracket_multiplicity": _value(mult[grown]),
        "dimension_ratio": _value(dimension_ratio(lam, n)),
    })
    if n >= lam.size + lam.part(0) and mult[grown] != 1:
        result.fail({"kind": "bracket", "index": grown.literal(), "value": _value(mult[grown])})
    return result


def wreath_spectrum(blam: Multipartition, n: int) -> SuiteResult:
    """Decomposition of T^bλ_n restricted to G(n) by exact character inner products."""
    group = blam.group
    result = SuiteResult(name="spectrum")
    model = build_rook(blam, n, group)
    expected = wreath_strips(blam, n) if n > blam.norm else [blam]
    elements = list(enumerate_elements("G", n, group))
    traces = {x: model.trace(x) for x in elements}
    for bnu in multipartitions_of(n, group):
        irrep = build_wreath(bnu, n)
        total = sum((traces[x] * irrep.trace(x.star()) for x in elements), Fraction(0))
        m = total / len(elements)
        want = 1 if bnu in expected else 0
        result.record(
            {"kind": "multiplicity", "index": bnu.literal(), "value": _value(m),
             "expected": want, "match": m == want},
            m == want,
        )
    grown = wreath_bracket(blam, n)
    result.extra.update({"bracket": grown.literal(), "group": group.name})
    return result


def rook_branching(target: Partition | Multipartition, n: int, group: FiniteGroupTable | None = None) -> SuiteResult:
    """T_n restricted to the shifted copy of Gamma(n-1, G) against T_(n-1) plus the removals.

    Compares traces on xi(gamma) for every gamma in Gamma(n-1, G), and the
    dimensions on both sides.
    """
    result = SuiteResult(name="rook-branching")
    if isinstance(target, Multipartition):
        group = target.group
        size = target.norm
        parts: list[tuple[Partition | Multipartition, int]] = wreath_branch(target)
    else:
        target = Partition(target)
        group = trivial_group()
        size = target.size
        parts = [(mu, 1) for mu in target.removable()]
    if not 1 <= size < n:
        raise PartitionError(f"rook branching needs 1 <= l < n, got l={size}, n={n}")
    whole = build_rook(target, n, group)
    same = build_rook(target, n - 1, group)
    smaller = [(build_rook(mu, n - 1, group), d) for mu, d in parts]
    dim_right = same.dim + sum(d * model.dim for model, d in smaller)
    result.extra.update({"dim_left": whole.dim, "dim_right": dim_right})
    if whole.dim != dim_right:
        result.fail({"kind": "dimension", "left": whole.dim, "right": dim_right})
    for gamma in enumerate_elements("Gamma", n - 1, group):
        left = whole.trace(gamma.shift())  # type: ignore[union-attr]
        right = same.trace(gamma) + sum((d * model.trace(gamma) for model, d in smaller), Fraction(0))  # type: ignore[arg-type]
        if left != right:
            result.fail({"kind": "trace", "element": str(gamma), "left": _value(left), "right": _value(right)})
            break
    result.rows.append({"lambda": str(target), "n": n, "terms": len(smaller) + 1, "match": result.passed})
    return result


# -- tables ------------------------------------------------------------------------------------------


def sstar_table(d: int) -> SuiteResult:
    """s*_λ(ν) for 1 <= |λ| <= d, |ν| <= d, with vanishing unless λ ⊆ ν and s*_λ(λ) = |λ|!/dim λ."""
    result = SuiteResult(name="sstar-table")
    diagrams = partitions_up_to(d)
    for lam in diagrams:
        if not lam:
            continue
        for nu in diagrams:
            value = eval_sstar(lam, nu)
            if not nu.contains(lam):
                ok = value == 0
            elif nu == lam:
                ok = value == Fraction(math.factorial(lam.size), dim_partition(lam))
            else:
                ok = value != 0
            result.record(
                {"lambda": lam.literal(), "nu": nu.literal(), "value": _value(value), "match": ok}, ok
            )
    return result


def charval(lam: Partition, rhos: Iterable[Partition] | None = None) -> SuiteResult:
    """chi^λ by Murnaghan–Nakayama, cross-checked against the trace of the seminormal model."""
    lam = Partition(lam)
    result = SuiteResult(name="charval")
    model: RepModel | None = None
    try:
        model = build_sym(lam)
    except BoundExceededError as e:
        logger.info("no matrix model for %s: %s", lam, e)
        result.extra["trace_check"] = "skipped"
    for rho in (list(rhos) if rhos is not None else partitions_of(lam.size)):
        value = char_value(lam, rho)
        row: dict[str, Any] = {"lambda": lam.literal(), "rho": rho.literal(), "value": value}
        ok = True
        if model is not None:
            trace = model.trace(class_representative(rho))
            row["trace"] = _value(trace)
            ok = trace == value
        row["match"] = ok
        result.record(row, ok)
    return result
