"""Limit commands for vgalg: truncated limits, windows and convergence experiments."""

import click

from app.algebra import AlgebraElement
from app.errors import ConfigError
from app.limits import (
    alpha_family,
    assemble_window,
    compression_experiment,
    eigen_pipeline,
    eps_approx,
    parse_sequence,
    theta_limit,
    xi_window,
)
from app.monomial import eps
from app.partitions import Multipartition, Partition
from app.reps import build_rook
from app.shifted import eval_hstar, eval_hstar_wreath
from app.suites import SuiteResult
from app.utils.command_utils import (
    group_option,
    load_group,
    output_options,
    parse_target,
    run,
)
from app.utils.rational import fraction_str
from app.utils.report import Report

_MODES = click.Choice(["exactFit", "cauchyFloat"])


def mode_option(f):
    return click.option(
        "--mode", type=_MODES, default="exactFit", show_default=True, help="Limit detector"
    )(f)


def _experiment_report(command: str, config, experiment) -> Report:
    rows = []
    for i, (n, value) in enumerate(zip(experiment.schedule, experiment.values)):
        row = {"n": n, "value": value}
        if experiment.exact_values:
            row["exact"] = experiment.exact_values[i]
        rows.append(row)
    extra = {"fitted_C": experiment.fitted_C, "kind": experiment.kind, "lambda": experiment.lam}
    if experiment.target is not None:
        extra["target"] = experiment.target
    return Report(
        command=command,
        params=config.echo(),
        passed=experiment.passed,
        rows=rows,
        counterexample=None if experiment.passed else {"schedule": experiment.schedule,
                                                       "values": experiment.values},
        extra=extra,
    )


@click.group()
def limit() -> None:
    """Large-n limits of truncated sequences and their convergence.

    Examples:
      vgalg limit eps --i 1 --m 1 --r 3
      vgalg limit window --family "delta(2)" --top 4
      vgalg limit pipeline --k 2 --lambda "[2,1]"
    """


@limit.command(name="eps")
@click.option("--i", "i", type=int, required=True, help="Index of eps_i")
@click.option("--m", "m", type=int, required=True, help="Centralizer level, i <= m")
@click.option("--r", "r", type=int, required=True, help="Truncation size")
@mode_option
@group_option
@output_options
def eps_(i: int, m: int, r: int, mode: str, group_spec: str, fmt: str, out: str | None) -> None:
    """Limit of theta_r of (n-m)^-1 sum_j (i,j), expected to be eps_i."""

    def produce(config):
        group = load_group(group_spec)
        result = theta_limit(eps_approx(i, m, group), r, mode)  # type: ignore[arg-type]
        expected = AlgebraElement.of(eps([i], r, group))
        suite = SuiteResult(name="limit eps")
        suite.record(
            {"r": r, "limit": str(result.element), "expected": str(expected),
             "match": result.element == expected},
            result.element == expected,
        )
        suite.extra["certificate"] = result.certificate.model_dump()
        return suite

    run("limit eps", {"i": i, "m": m, "r": r, "mode": mode, "group": group_spec},
        produce, format=fmt, out=out)


@limit.command()
@click.option("--k", "k", type=int, required=True, help="Degree of alpha_k")
@click.option("--r", "r", type=int, required=True, help="Truncation size")
@click.option("--lambda", "lam", default=None, help="Check the eigenvalue on T^lambda_r")
@click.option("--mlambda", "mlam", default=None, help="Check the eigenvalue on T^bλ_r")
@mode_option
@group_option
@output_options
def alpha(
    k: int, r: int, lam: str | None, mlam: str | None, mode: str, group_spec: str,
    fmt: str, out: str | None,
) -> None:
    """Limit of theta_r(alpha_{k,n}); its eigenvalue on T_r is h*_k."""

    def produce(config):
        group = load_group(group_spec)
        result = theta_limit(alpha_family(k, group), r, mode)  # type: ignore[arg-type]
        suite = SuiteResult(name="limit alpha")
        suite.extra["certificate"] = result.certificate.model_dump()
        row = {"r": r, "limit": str(result.element)}
        if lam is None and mlam is None:
            suite.rows.append(row)
            return suite
        target = parse_target(lam, mlam, group)
        model = build_rook(target, r, group)
        value = model.central_eigenvalue(result.element)
        if isinstance(target, Multipartition):
            expected = eval_hstar_wreath(k, target)
        else:
            expected = eval_hstar(k, Partition(target))
        row.update({"lambda": str(target), "eigenvalue": fraction_str(value),
                    "hstar": fraction_str(expected), "match": value == expected})
        suite.record(row, value == expected)
        return suite

    run("limit alpha", {"k": k, "r": r, "lambda": lam, "mlambda": mlam, "mode": mode,
                        "group": group_spec}, produce, format=fmt, out=out)


@limit.command()
@click.option("--element", "element", required=True, help='Monomial, e.g. "(1,2)" or "eps{1}"')
@click.option("--r", "r", type=int, required=True, help="Truncation size")
@group_option
@output_options
def stable(element: str, r: int, group_spec: str, fmt: str, out: str | None) -> None:
    """Limit of a constant family, expected to be its truncation."""

    def produce(config):
        seq = parse_sequence(f"stable({element})", load_group(group_spec))
        x = seq(seq.min_size)
        expected = x.embed(r) if r >= x.size else x.truncate(r)
        result = theta_limit(seq, r)
        suite = SuiteResult(name="limit stable")
        suite.record(
            {"r": r, "limit": str(result.element), "expected": str(expected),
             "match": result.element == expected},
            result.element == expected,
        )
        return suite

    run("limit stable", {"element": element, "r": r, "group": group_spec},
        produce, format=fmt, out=out)


@limit.command()
@click.option("--family", "family", required=True, help='e.g. "delta(2)", "eps(1,2)", "shift(u(1))"')
@click.option("--top", "top", type=int, required=True, help="Largest window size")
@click.option("--xi", "with_xi", is_flag=True, help="Also report the shifted window")
@mode_option
@group_option
@output_options
def window(
    family: str, top: int, with_xi: bool, mode: str, group_spec: str, fmt: str, out: str | None
) -> None:
    """Assemble and validate the window of limits b_r for r up to --top."""

    def produce(config):
        seq = parse_sequence(family, load_group(group_spec))
        w, certificates = assemble_window(seq, top, mode)  # type: ignore[arg-type]
        suite = SuiteResult(name="limit window")
        for r in w.sizes:
            suite.rows.append({"r": r, "element": str(w[r]), "certificate": certificates[r].type})
        suite.extra.update({"level": w.m, "degree_bound": w.degree_bound})
        if with_xi:
            shifted = xi_window(w)
            suite.extra["xi"] = {str(r): str(shifted[r]) for r in shifted.sizes}
        return suite

    run("limit window", {"family": family, "top": top, "xi": with_xi, "mode": mode,
                         "group": group_spec}, produce, format=fmt, out=out)


@limit.command()
@click.option("--k", "k", type=int, required=True, help="Degree of alpha_k")
@click.option("--lambda", "lam", default=None, help='Young diagram, e.g. "[2,1]"')
@click.option("--mlambda", "mlam", default=None, help="Multipartition for a nontrivial group")
@click.option("--schedule", default=None, help='Sizes n, e.g. "8,12,18,27,40"')
@click.option("--tol", type=float, default=None, help="Tolerance of the rate certificate")
@group_option
@output_options
def pipeline(
    k: int, lam: str | None, mlam: str | None, schedule: str | None, tol: float | None,
    group_spec: str, fmt: str, out: str | None,
) -> None:
    """Eigenvalues of alpha_{k,n} on lambda[n] converging to h*_k at rate 1/n."""

    def produce(config):
        target = parse_target(lam, mlam, load_group(group_spec))
        experiment = eigen_pipeline(k, target, config.schedule, config.tol or 1e-8)
        return _experiment_report("limit pipeline", config, experiment)

    run("limit pipeline", {"k": k, "lambda": lam, "mlambda": mlam, "group": group_spec},
        produce, schedule=schedule, tol=tol, format=fmt, out=out)


@limit.command()
@click.option("--family", "family", required=True, help='e.g. "eps(1,1)", "alpha(1)"')
@click.option("--lambda", "lam", required=True, help='Young diagram, e.g. "[1]"')
@click.option("--r", "r", type=int, required=True, help="Compression level")
@click.option("--schedule", default=None, help='Sizes N, e.g. "6,8,10,12,14"')
@click.option("--tol", type=float, default=None, help="Tolerance of the rate certificate")
@output_options
def compress(
    family: str, lam: str, r: int, schedule: str | None, tol: float | None,
    fmt: str, out: str | None,
) -> None:
    """Operator-norm distance between T_r(b_r) and the compressed T_N(alpha_N)."""

    def produce(config):
        seq = parse_sequence(family)
        target = parse_target(lam, None, load_group("trivial"))
        if not isinstance(target, Partition):
            raise ConfigError("compression experiments take --lambda")
        experiment = compression_experiment(seq, target, r, config.schedule, config.tol or 1e-8)
        return _experiment_report("limit compress", config, experiment)

    run("limit compress", {"family": family, "lambda": lam, "r": r},
        produce, schedule=schedule, tol=tol, format=fmt, out=out)
