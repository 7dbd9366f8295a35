"""Large-n limits at finite scale.

A ``SequenceFamily`` is an evaluator n -> element of A(n, G) with declared
degree bound, centralizer level and a hint on how fast its truncated
coefficients can grow. ``theta_limit`` finds lim_n theta_r(alpha_n) exactly
by fitting every coefficient as a rational function of n; windows collect
these limits over a range of sizes and check they form a consistent element.
"""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np
import sympy
from pydantic import BaseModel, Field

from app.algebra import AlgebraElement, CentralizerSpec, is_in_centralizer
from app.central import alpha_terms, build_alpha, build_delta, build_u, lift, parse_family
from app.config import get_bounds
from app.errors import DivergenceError, FitError, ParseError, VGAlgError, WindowError
from app.groups import FiniteGroupTable, trivial_group
from app.linalg import dense_nullspace
from app.monomial import MonomialMatrix, parse_monomial, transposition
from app.partitions import Multipartition, Partition, bracket, wreath_bracket
from app.reps import build_rook
from app.shifted import (
    ShiftedFunction,
    eval_hstar,
    eval_hstar_wreath,
    express_in_psharp,
    parse_shifted,
)
from app.utils.rational import fraction_str, to_fraction

logger = logging.getLogger(__name__)

DEFAULT_SCHEDULE = (8, 12, 18, 27, 40)
RATE_SLACK = 0.5

Mode = Literal["exactFit", "cauchyFloat"]


# -- families -------------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceFamily:
    """n -> alpha_n with the data needed to take limits of its truncations.

    ``hint`` bounds the numerator and denominator degrees (in n) of every
    truncated coefficient. ``min_size`` is the first n at which the family
    is defined and lies in its centralizer.
    """

    name: str
    kind: str
    evaluator: Callable[[int], AlgebraElement] = field(compare=False, repr=False)
    degree_bound: int
    level: int
    hint: tuple[int, int] | None
    min_size: int
    group: FiniteGroupTable = field(default_factory=trivial_group, compare=False, repr=False)

    def __call__(self, n: int) -> AlgebraElement:
        if n < self.min_size:
            raise VGAlgError(f"{self.name} starts at n={self.min_size}, got {n}")
        return self.evaluator(n)


def stable(x: AlgebraElement, name: str | None = None) -> SequenceFamily:
    """The constant family alpha_n = x embedded in size n."""
    return SequenceFamily(
        name=name or f"stable({x})",
        kind="stable",
        evaluator=lambda n: x.embed(n),
        degree_bound=max(int(x.degree), 0) if not x.is_zero else 0,
        level=x.size,
        hint=(0, 0),
        min_size=x.size,
        group=x.group,
    )


def delta_family(
    k: int, group: FiniteGroupTable | None = None, phi: Sequence[Fraction] | None = None
) -> SequenceFamily:
    group = group or trivial_group()
    return SequenceFamily(
        name=f"delta({k})",
        kind="delta",
        evaluator=lambda n: build_delta(k, n, group, phi),
        degree_bound=k,
        level=0,
        hint=(0, 0),
        min_size=1,
        group=group,
    )


def u_family(i: int, group: FiniteGroupTable | None = None) -> SequenceFamily:
    group = group or trivial_group()
    return SequenceFamily(
        name=f"u({i})",
        kind="u",
        evaluator=lambda n: build_u(i, n, group),
        degree_bound=2,
        level=i,
        hint=(0, 0),
        min_size=i,
        group=group,
    )


def eps_approx(i: int, m: int, group: FiniteGroupTable | None = None) -> SequenceFamily:
    """alpha_n = (n - m)^-1 sum_{j=m+1..n} (i, j), whose truncations tend to eps_i.

    Raises:
        VGAlgError: Unless 1 <= i <= m.
    """
    group = group or trivial_group()
    if not 1 <= i <= m:
        raise VGAlgError(f"epsApprox needs 1 <= i <= m, got i={i}, m={m}")

    def evaluate(n: int) -> AlgebraElement:
        terms = [(transposition(i, j, n, group), Fraction(1, n - m)) for j in range(m + 1, n + 1)]
        return AlgebraElement(n, terms, group)

    return SequenceFamily(
        name=f"epsApprox({i},{m})",
        kind="epsApprox",
        evaluator=evaluate,
        degree_bound=2,
        level=m,
        hint=(1, 1),
        min_size=m + 1,
        group=group,
    )


def alpha_family(k: int, group: FiniteGroupTable | None = None) -> SequenceFamily:
    group = group or trivial_group()
    return SequenceFamily(
        name=f"alpha({k})",
        kind="alpha",
        evaluator=lambda n: build_alpha(k, n, group),
        degree_bound=2 * k,
        level=0,
        hint=(2 * k, k),
        min_size=1,
        group=group,
    )


def lift_family(f: ShiftedFunction, group: FiniteGroupTable | None = None) -> SequenceFamily:
    group = group or trivial_group()
    d = f.degree_bound
    return SequenceFamily(
        name=f"lift({f})",
        kind="lift",
        evaluator=lambda n: lift(f, n, group),
        degree_bound=d,
        level=0,
        hint=(d, 0),
        min_size=1,
        group=group,
    )


def shifted(inner: SequenceFamily) -> SequenceFamily:
    """n -> xi(inner(n - 1)), one centralizer level higher."""
    return SequenceFamily(
        name=f"shifted({inner.name})",
        kind="shifted",
        evaluator=lambda n: inner(n - 1).shift(),
        degree_bound=inner.degree_bound,
        level=inner.level + 1,
        hint=inner.hint,
        min_size=inner.min_size + 1,
        group=inner.group,
    )


_CALL = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$", re.S)


def _monomial_size(text: str) -> int:
    points = re.findall(r"\d+", re.sub(r"\[g\d+@", "[@", text))
    return max((int(p) for p in points), default=1)


def parse_sequence(text: str, group: FiniteGroupTable | None = None) -> SequenceFamily:
    """Parse a family written as on the command line.

    ``eps(i,m)``, ``alpha(k)``, ``delta(k[,phi])``, ``u(i)``, ``lift(f)``,
    ``stable(<monomial>)`` and ``shift(<family>)``.

    Raises:
        ParseError: On unknown names or malformed arguments.
    """
    group = group or trivial_group()
    m = _CALL.match(text)
    if not m:
        raise ParseError(f"cannot parse family {text!r}")
    name, args = m.group(1), m.group(2).strip()
    if name == "shift":
        return shifted(parse_sequence(args, group))
    if name == "stable":
        try:
            key = parse_monomial(args, _monomial_size(args), group)
        except VGAlgError as e:
            raise ParseError(str(e)) from None
        return stable(AlgebraElement.of(key))
    if name == "eps":
        try:
            i, level = (int(a) for a in args.split(","))
        except ValueError:
            raise ParseError(f"eps needs two integers, got {args!r}") from None
        return eps_approx(i, level, group)
    tag = parse_family(text)
    if tag.kind == "delta":
        return delta_family(tag.k, group, tag.class_function(group))  # type: ignore[arg-type]
    if tag.kind == "u":
        return u_family(tag.i, group)  # type: ignore[arg-type]
    if tag.kind == "alpha":
        return alpha_family(tag.k, group)  # type: ignore[arg-type]
    if tag.kind == "lift":
        return lift_family(parse_shifted(tag.f), group)  # type: ignore[arg-type]
    raise ParseError(f"{tag} is not a sequence family")


# -- rational fits ------------------------------------------------------------------------


class Certificate(BaseModel):
    """How a limit was certified."""

    type: Mode
    sample_points: list[int]
    validation: list[int] = Field(default_factory=list)
    passed: bool = True
    detail: dict = Field(default_factory=dict)


@dataclass(frozen=True)
class LimitResult:
    element: AlgebraElement
    certificate: Certificate


_N = sympy.Symbol("n")


def rational_fit(
    points: Sequence[int], values: Sequence[Fraction], num_degree: int, den_degree: int
) -> sympy.Expr:
    """The rational function P/Q (deg P <= p, deg Q <= q) through the given samples.

    Raises:
        FitError: If no such function exists.
    """
    if all(v == values[0] for v in values):
        return sympy.Rational(values[0].numerator, values[0].denominator)
    rows = []
    for x, y in zip(points, values):
        row = [Fraction(x) ** a for a in range(num_degree + 1)]
        row += [-y * Fraction(x) ** b for b in range(den_degree + 1)]
        rows.append(row)
    for vec in dense_nullspace(rows):
        num = sum(sympy.Rational(c.numerator, c.denominator) * _N**a for a, c in enumerate(vec[: num_degree + 1]))
        den = sum(sympy.Rational(c.numerator, c.denominator) * _N**b for b, c in enumerate(vec[num_degree + 1 :]))
        if den != 0:
            return sympy.cancel(num / den)
    raise FitError(f"no rational function of degree ({num_degree}, {den_degree}) fits the samples")


def rational_limit(expr: sympy.Expr) -> Fraction:
    """lim_{n -> oo} of a rational function of n.

    Raises:
        DivergenceError: If the numerator degree exceeds the denominator degree.
    """
    num, den = sympy.fraction(sympy.cancel(expr))
    p, q = sympy.Poly(num, _N), sympy.Poly(den, _N)
    if p.is_zero:
        return Fraction(0)
    if p.degree() > q.degree():
        raise DivergenceError(f"coefficient {expr} diverges")
    if p.degree() < q.degree():
        return Fraction(0)
    return to_fraction(sympy.Rational(p.LC()) / sympy.Rational(q.LC()))


def _sample(seq: SequenceFamily, r: int, points: Sequence[int]) -> list[AlgebraElement]:
    return [seq(n).truncate(r) for n in points]


def theta_limit(seq: SequenceFamily, r: int, mode: Mode = "exactFit", tol: float = 1e-8,
                schedule: Sequence[int] | None = None) -> LimitResult:
    """lim_n theta_r(seq(n)).

    Raises:
        FitError: On a failed validation point or a non-Cauchy trajectory.
        DivergenceError: If a coefficient has no finite limit.
    """
    if r < 1:
        raise VGAlgError(f"truncation size must be >= 1, got {r}")
    start = max(r + 1, seq.min_size)
    if mode == "cauchyFloat":
        return _cauchy_limit(seq, r, schedule or [n for n in DEFAULT_SCHEDULE if n >= start], tol)
    if seq.hint is None:
        raise FitError(f"{seq.name} has no degree hint; use cauchyFloat")

    p, q = seq.hint
    total = p + q
    points = list(range(start, start + total + 2))
    checks = [start + total + 2, start + total + 3]
    samples = _sample(seq, r, points)
    validation = _sample(seq, r, checks)
    keys: set[MonomialMatrix] = set()
    for s in samples + validation:
        keys.update(k for k, _ in s.items())

    limit_terms: dict[MonomialMatrix, Fraction] = {}
    for key in sorted(keys, key=str):
        values = [s.coefficient(key) for s in samples]
        expr = rational_fit(points, values, p, q)
        for n, s in zip(checks, validation):
            if to_fraction(sympy.Rational(expr.subs(_N, n))) != s.coefficient(key):
                raise FitError(f"{seq.name}, r={r}: fit for {key} fails at n={n}")
        try:
            value = rational_limit(expr)
        except DivergenceError:
            raise DivergenceError(f"{seq.name}, r={r}: coefficient of {key} is {expr}") from None
        if value:
            limit_terms[key] = value
        logger.debug("%s r=%d: %s -> %s", seq.name, r, key, fraction_str(value))

    element = AlgebraElement(r, limit_terms, seq.group)
    certificate = Certificate(type="exactFit", sample_points=points, validation=checks)
    return LimitResult(element, certificate)


def _cauchy_limit(seq: SequenceFamily, r: int, schedule: Sequence[int], tol: float) -> LimitResult:
    if len(schedule) < 2:
        raise FitError(f"{seq.name}: cauchyFloat needs at least two schedule points")
    samples = _sample(seq, r, schedule)
    diffs = []
    for a, b in zip(samples, samples[1:]):
        d = b - a
        diffs.append(max((abs(float(c)) for _, c in d.items()), default=0.0))
    passed = diffs[-1] <= tol and all(y <= x + tol for x, y in zip(diffs, diffs[1:]))
    certificate = Certificate(
        type="cauchyFloat",
        sample_points=list(schedule),
        passed=passed,
        detail={"differences": diffs, "tol": tol},
    )
    if not passed:
        raise FitError(f"{seq.name}, r={r}: successive differences {diffs} do not fall below {tol}")
    return LimitResult(samples[-1], certificate)


# -- windows -------------------------------------------------------------------------------


@dataclass
class WindowElement:
    """A theta-consistent run (b_r) of elements, b_r of size r."""

    m: int
    group: FiniteGroupTable
    window: dict[int, AlgebraElement]
    degree_bound: int

    @property
    def sizes(self) -> list[int]:
        return sorted(self.window)

    def __getitem__(self, r: int) -> AlgebraElement:
        return self.window[r]

    def validate(self) -> None:
        """Check consistency, centralizer membership and the degree bound.

        Raises:
            WindowError: At the first failing size.
        """
        sizes = self.sizes
        for r in sizes:
            b = self.window[r]
            if b.size != r:
                raise WindowError(r, f"element has size {b.size}")
            if not b.is_zero and b.degree > self.degree_bound:
                raise WindowError(r, f"degree {b.degree} exceeds bound {self.degree_bound}")
            if r > self.m:
                check = is_in_centralizer(b, CentralizerSpec(m=self.m))
                if not check:
                    raise WindowError(r, f"does not commute with {check.generator}")
            if r + 1 in self.window and self.window[r + 1].truncate(r) != b:
                raise WindowError(r + 1, "truncation does not match the previous size")

    def _combine(self, other: "WindowElement", op: Callable) -> "WindowElement":
        common = sorted(set(self.window) & set(other.window))
        return WindowElement(
            max(self.m, other.m),
            self.group,
            {r: op(self.window[r], other.window[r]) for r in common},
            max(self.degree_bound, other.degree_bound),
        )

    def __add__(self, other: "WindowElement") -> "WindowElement":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "WindowElement") -> "WindowElement":
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c: Fraction | int) -> "WindowElement":
        return WindowElement(self.m, self.group, {r: b.scale(c) for r, b in self.window.items()}, self.degree_bound)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WindowElement):
            return NotImplemented
        return self.window == other.window


def window_of(builder: Callable[[int], AlgebraElement], m: int, top: int,
              degree_bound: int, group: FiniteGroupTable | None = None) -> WindowElement:
    """The window (builder(r)) for r = max(m, 1)..top."""
    group = group or trivial_group()
    return WindowElement(m, group, {r: builder(r) for r in range(max(m, 1), top + 1)}, degree_bound)


def assemble_window(seq: SequenceFamily, top: int, mode: Mode = "exactFit") -> tuple[WindowElement, dict[int, Certificate]]:
    """Limits b_r for r = max(m, 1)..top, validated as a window element.

    Raises:
        WindowError: If the limits fail an invariant.
    """
    window: dict[int, AlgebraElement] = {}
    certificates: dict[int, Certificate] = {}
    for r in range(max(seq.level, 1), top + 1):
        result = theta_limit(seq, r, mode)
        window[r] = result.element
        certificates[r] = result.certificate
    w = WindowElement(seq.level, seq.group, window, seq.degree_bound)
    w.validate()
    return w, certificates


def xi_window(w: WindowElement) -> WindowElement:
    """Apply the shift level-wise: xi(b_r) sits at size r + 1 and the level grows by one."""
    return WindowElement(
        w.m + 1, w.group, {r + 1: b.shift() for r, b in w.window.items()}, w.degree_bound
    )


# -- experiments ------------------------------------------------------------------------------


class ExperimentResult(BaseModel):
    kind: str
    lam: str
    schedule: list[int]
    values: list[float]
    exact_values: list[str] = Field(default_factory=list)
    target: str | None = None
    fitted_C: float
    passed: bool


def rate_certificate(schedule: Sequence[int], errors: Sequence[float], tol: float = 1e-8) -> tuple[float, bool]:
    """fitted C = max n·|E(n)| over the schedule.

    The schedule is split into a head and a tail half. The check passes when
    the tail maximum of n·|E(n)| is at most (1 + RATE_SLACK) times the head
    maximum, plus tol, so a bounded upward drift still passes.
    """
    scaled = [n * abs(e) for n, e in zip(schedule, errors)]
    if not scaled:
        return 0.0, True
    fitted = max(scaled)
    half = max(len(scaled) // 2, 1)
    head, tail = scaled[:half], scaled[half:] or scaled[-1:]
    passed = max(tail) <= (1 + RATE_SLACK) * max(head) + tol
    return fitted, passed


def compression_experiment(
    seq: SequenceFamily,
    lam: Partition,
    r: int,
    schedule: Sequence[int] | None = None,
    tol: float = 1e-8,
) -> ExperimentResult:
    """E(N) = ||T_r(b_r) - P_r T_N(seq(N)) P_r|| on the orthogonal rook models."""
    lam = Partition(lam)
    if not seq.group.is_trivial:
        raise VGAlgError("compression experiments use orthogonal models, available for trivial G only")
    if schedule is None:
        ell = lam.size
        schedule = [n for n in DEFAULT_SCHEDULE if n > r and math.comb(n, ell) <= get_bounds().max_rep_dim]
    schedule = [n for n in schedule if n >= max(seq.min_size, r)]

    if seq.kind == "stable" or lam.size > r:
        zeros = [0.0] * len(schedule)
        return ExperimentResult(kind="compression", lam=str(lam), schedule=list(schedule),
                                values=zeros, fitted_C=0.0, passed=True)

    limit = theta_limit(seq, r).element
    small = build_rook(lam, r, variant="orthogonal")
    reference = small.apply_algebra(limit)
    errors = []
    for n in schedule:
        model = build_rook(lam, n, variant="orthogonal")
        d = model.inner.dim
        keep = [idx * d + v for idx, a in enumerate(model.subsets) if not a or a[-1] < r for v in range(d)]
        full = model.apply_algebra(seq(n))
        compressed = full[np.ix_(keep, keep)]
        err = float(np.linalg.norm(reference - compressed, ord=2)) if keep else 0.0
        errors.append(err)
        logger.debug("compression %s N=%d: %.3e", seq.name, n, err)
    fitted, passed = rate_certificate(schedule, errors, tol)
    return ExperimentResult(kind="compression", lam=str(lam), schedule=list(schedule),
                            values=errors, fitted_C=fitted, passed=passed)


def pipeline_value(k: int, target: Partition | Multipartition, n: int) -> Fraction:
    """Eigenvalue of alpha_{k,n} on the representation indexed by target[n].

    Each frakp term of alpha_{k,n} is expanded in the p# generators, which
    act on target[n] by their character ratios.
    """
    get_bounds().check("max_character_n", n)
    group: FiniteGroupTable | None = None
    if isinstance(target, Multipartition):
        grown: Partition | Multipartition = wreath_bracket(target, n)
        if target.group.is_trivial:
            grown = grown[0]
        else:
            group = target.group
    else:
        grown = bracket(target, n)
    return sum(
        (coef * express_in_psharp(f, group).evaluate(grown) for coef, f in alpha_terms(k, n, group)),
        Fraction(0),
    )


def pipeline_target(k: int, target: Partition | Multipartition) -> Fraction:
    if isinstance(target, Multipartition):
        return eval_hstar_wreath(k, target)
    return eval_hstar(k, target)


def eigen_pipeline(
    k: int, target: Partition | Multipartition, schedule: Sequence[int] | None = None,
    tol: float = 1e-8,
) -> ExperimentResult:
    """Trajectory of alpha_{k,n} eigenvalues on target[n] against its limit."""
    size = target.norm if isinstance(target, Multipartition) else Partition(target).size
    first = target[0].part(0) if isinstance(target, Multipartition) else Partition(target).part(0)
    if schedule is None:
        schedule = [n for n in DEFAULT_SCHEDULE if n <= get_bounds().max_character_n]
    schedule = [n for n in schedule if n >= size + first and n >= 1]
    goal = pipeline_target(k, target)
    values = [pipeline_value(k, target, n) for n in schedule]
    errors = [float(v - goal) for v in values]
    fitted, passed = rate_certificate(schedule, errors, tol)
    return ExperimentResult(
        kind="pipeline",
        lam=str(target),
        schedule=list(schedule),
        values=[float(v) for v in values],
        exact_values=[fraction_str(v) for v in values],
        target=fraction_str(goal),
        fitted_C=fitted,
        passed=passed,
    )
