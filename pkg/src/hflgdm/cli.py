"""Command-line front end.

Subcommands: ``check`` (single-matrix consistency repair), ``gdm`` (group
decision), ``calibrate`` (Monte-Carlo critical values), ``case-study`` (the
bundled fund-evaluation reproduction).  Exit codes: 0 success, 1 validation
error, 2 iteration cap / unacceptable consistency, 3 reproduction tolerance
violated.
"""

import dataclasses
import json
import sys
import click
import numpy as np

from . import case_study as cs
from .consensus import GroupProblem, algorithm2, fuse_indices
from .consistency import (
    ConsistencyParams,
    ConsistencyReport,
    PriorityVector,
    StopMode,
    algorithm1,
    calibrate,
    write_calibration_csvs,
)
from .errors import HflprError, IterationCapExceeded, ValidationError
from .hflpr import (
    Hflpr,
    hflpr_from_json_dict,
    hflpr_to_json_dict,
)

PORTAL_MAX_N = 5
PORTAL_MAX_DMS = 5


def _fmt_index(v: float) -> str:
    return f"{v:g}" if v == int(v) else f"{v:.4f}"


def _matrix_lines(matrix: Hflpr):
    for row in matrix.cells:
        yield " ".join(
            "{" + ", ".join(f"s_{_fmt_index(v)}" for v in c.indices) + "}" for c in row
        )


def _report_dict(report: ConsistencyReport) -> dict:
    return {
        "accepted": report.accepted,
        "iterations": report.iterations,
        "adjustments": report.adjustments,
        "hflgci": report.hflgci,
        "hflgci_trace": list(report.hflgci_trace),
        "optimal_slice": report.optimal_slice + 1,
        "priority": [round(w, 6) for w in report.priority],
        "final_matrix": hflpr_to_json_dict(report.final_matrix),
    }


def _echo_err(message: str):
    click.echo(f"error: {message}", err=True)


@click.group()
def main():
    """Consistency and consensus tools for hesitant linguistic preference matrices."""


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--alpha", type=float, default=None, help="Priority-difference weight; default (n-1)/2.")
@click.option("--beta", type=float, default=0.5, show_default=True, help="Retention weight per repair step.")
@click.option("--threshold", type=float, default=None, help="Critical value; switches to threshold stop mode.")
@click.option("--epsilon", type=float, default=1e-4, show_default=True, help="Convergence stop tolerance.")
@click.option("--zeta", type=float, default=0.5, show_default=True)
@click.option("--max-iterations", type=int, default=50, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "pretty"]), default="pretty", show_default=True)
@click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None, help="Write the report JSON here.")
def check(input_path, alpha, beta, threshold, epsilon, zeta, max_iterations, fmt, output_path):
    """Check one matrix and repair it to acceptable consistency."""
    try:
        with open(input_path, "r", encoding="utf-8") as fh:
            matrix = hflpr_from_json_dict(json.load(fh))
    except ValidationError as exc:
        _echo_err(f"invalid matrix at cell ({exc.i},{exc.j}): {exc}")
        sys.exit(1)
    except (HflprError, KeyError, ValueError, json.JSONDecodeError) as exc:
        _echo_err(f"cannot parse {input_path}: {exc}")
        sys.exit(1)

    if alpha is None:
        alpha = ConsistencyParams.default_alpha(matrix.n)
    params = ConsistencyParams(
        alpha=alpha,
        beta=beta,
        threshold=threshold if threshold is not None else 0.0,
        epsilon=epsilon,
        max_iterations=max_iterations,
        zeta=zeta,
        stop_mode=StopMode.THRESHOLD if threshold is not None else StopMode.CONVERGENCE,
    )
    try:
        report = algorithm1(matrix, params)
    except IterationCapExceeded as exc:
        _echo_err(str(exc))
        sys.exit(2)
    except HflprError as exc:
        _echo_err(str(exc))
        sys.exit(1)

    doc = _report_dict(report)
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo("User's Input HFLPR")
        for line in _matrix_lines(matrix):
            click.echo(f"  {line}")
        click.echo("Final Result")
        for line in _matrix_lines(report.final_matrix):
            click.echo(f"  {line}")
        click.echo(
            f"After adjusting the individual HFLPR {report.adjustments} times, "
            "the HFLPR with acceptable consistency can be obtained."
        )
        click.echo(f"HFLGCI: {report.hflgci:.6f}  (slice {report.optimal_slice + 1})")
    sys.exit(0 if report.accepted else 2)


def _parse_group(doc: dict, gamma, alpha, beta, zeta, threshold):
    tau = int(doc.get("tau", 4))
    gamma = float(doc.get("gamma", 0.9)) if gamma is None else gamma
    alpha_doc = doc.get("alpha")
    beta = float(doc.get("beta", 0.5)) if beta is None else beta
    zeta = float(doc.get("zeta", 0.5)) if zeta is None else zeta
    threshold = doc.get("threshold") if threshold is None else threshold

    def build(dms):
        matrices = tuple(
            hflpr_from_json_dict({"tau": d.get("tau", tau), **d}) for d in dms
        )
        n = matrices[0].n
        a = alpha if alpha is not None else (
            float(alpha_doc) if alpha_doc is not None else ConsistencyParams.default_alpha(n)
        )
        params = ConsistencyParams(
            alpha=a,
            beta=beta,
            zeta=zeta,
            threshold=float(threshold) if threshold is not None else 0.0,
            stop_mode=StopMode.THRESHOLD if threshold is not None else StopMode.CONVERGENCE,
        )
        return GroupProblem(
            matrices=matrices, gamma=gamma, zeta_mod=zeta, consistency_params=params
        )

    if "problems_per_index" in doc:
        problems = [build(group) for group in doc["problems_per_index"]]
        weights = doc.get("index_weights")
        iw = PriorityVector(tuple(weights)) if weights else None
        return problems, iw
    return [build(doc["dms"])], None


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--gamma", type=float, default=None, help="Consensus threshold; default from the file (0.9).")
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--zeta", type=float, default=None)
@click.option("--threshold", type=float, default=None, help="Consistency critical value (threshold stop mode).")
@click.option("--no-portal-limits", is_flag=True, help="Allow n > 5 or more than 5 decision makers.")
@click.option("--format", "fmt", type=click.Choice(["json", "pretty"]), default="pretty", show_default=True)
@click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None)
def gdm(input_path, gamma, alpha, beta, zeta, threshold, no_portal_limits, fmt, output_path):
    """Run the group decision procedure on a group JSON file."""
    try:
        with open(input_path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        problems, index_weights = _parse_group(doc, gamma, alpha, beta, zeta, threshold)
    except ValidationError as exc:
        _echo_err(f"invalid matrix at cell ({exc.i},{exc.j}): {exc}")
        sys.exit(1)
    except (HflprError, KeyError, ValueError, json.JSONDecodeError) as exc:
        _echo_err(f"cannot parse {input_path}: {exc}")
        sys.exit(1)

    if not no_portal_limits:
        for problem in problems:
            if problem.n > PORTAL_MAX_N:
                _echo_err(
                    f"portal limit: 3-{PORTAL_MAX_N} alternatives (got {problem.n}); "
                    "use --no-portal-limits to override"
                )
                sys.exit(1)
            if problem.k > PORTAL_MAX_DMS:
                _echo_err(
                    f"portal limit: at most {PORTAL_MAX_DMS} decision makers "
                    f"(got {problem.k}); use --no-portal-limits to override"
                )
                sys.exit(1)

    try:
        traces = [algorithm2(problem) for problem in problems]
    except IterationCapExceeded as exc:
        _echo_err(str(exc))
        sys.exit(2)
    except HflprError as exc:
        _echo_err(str(exc))
        sys.exit(1)

    out = {"problems": []}
    for trace in traces:
        out["problems"].append(
            {
                "dm_weights": [round(w, 6) for w in trace.dm_weights],
                "rounds": [dataclasses.asdict(r) for r in trace.rounds],
                "modification_rounds": trace.modification_rounds,
                "collective": hflpr_to_json_dict(trace.collective),
                "priority": [round(w, 6) for w in trace.final_priority],
                "ranking": [i + 1 for i in trace.ranking],
                "consistency_iterations": [
                    r.iterations for r in trace.consistency_reports
                ],
            }
        )
    if index_weights is not None:
        fused, ranking = fuse_indices(
            [t.final_priority for t in traces], index_weights
        )
        out["fused_priority"] = [round(w, 6) for w in fused]
        out["fused_ranking"] = [i + 1 for i in ranking]

    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2)
    if fmt == "json":
        click.echo(json.dumps(out, indent=2))
    else:
        for k, trace in enumerate(traces):
            label = f"problem {k + 1}: " if len(traces) > 1 else ""
            click.echo(
                f"{label}Ranking weight:"
                + ",".join(f"{w:.4f}" for w in trace.final_priority)
            )
            click.echo(
                f"{label}The numbers of iterations for this method to reach "
                f"consensus is {trace.modification_rounds}"
            )
            click.echo(f"{label}Ranking: {trace.ranking_string()}")
        if index_weights is not None:
            click.echo(
                "Fused ranking weight:" + ",".join(f"{w:.4f}" for w in out["fused_priority"])
            )
            click.echo(
                "Fused ranking: " + " > ".join(f"X{i}" for i in out["fused_ranking"])
            )
    sys.exit(0)


@main.command(name="calibrate")
@click.option("--n", "n", type=int, required=True, help="Matrix order, 3-8.")
@click.option("--offset", type=float, default=None, help="alpha = (n-1)/2 + offset; one of 0/0.2/0.4/0.6.")
@click.option("--alpha", type=float, default=None, help="Explicit alpha (overrides --offset).")
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, required=True, help="Random seed (mandatory for reproducibility).")
@click.option("--beta", type=float, default=0.5, show_default=True)
@click.option("--prefix", default="calibration", show_default=True, help="Output CSV path prefix.")
def calibrate_cmd(n, offset, alpha, samples, seed, beta, prefix):
    """Estimate the critical value for (n, alpha) by Monte-Carlo simulation."""
    if not 3 <= n <= 8:
        _echo_err(f"n must be in [3, 8], got {n}")
        sys.exit(1)
    if samples < 1:
        _echo_err(f"samples must be >= 1, got {samples}")
        sys.exit(1)
    if alpha is None:
        offset = 0.0 if offset is None else offset
        if offset not in (0.0, 0.2, 0.4, 0.6):
            _echo_err(f"offset must be one of 0, 0.2, 0.4, 0.6 (got {offset})")
            sys.exit(1)
        alpha = ConsistencyParams.default_alpha(n) + offset
    elif alpha < (n - 1) / 2:
        _echo_err(f"alpha must be at least (n-1)/2 = {(n-1)/2}")
        sys.exit(1)

    rng = np.random.default_rng(seed)
    params = ConsistencyParams(alpha=alpha, beta=beta)
    result = calibrate(n, alpha, samples, rng, params=params)
    paths = (f"{prefix}_samples.csv", f"{prefix}_summary.csv", f"{prefix}_density.csv")
    write_calibration_csvs(result, *paths)
    click.echo(
        f"n={n} alpha={alpha:g} samples={samples}: mean={result.mean:.4f} "
        f"variance={result.variance:.4f} suggested={result.suggested:.4f}"
    )
    click.echo("wrote " + ", ".join(paths))
    sys.exit(0)


@main.command(name="case-study")
@click.option("--gamma", type=float, default=None, help="Consensus threshold; default 0.9 (the portal run).")
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--zeta", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "pretty"]), default="pretty", show_default=True)
def case_study_cmd(gamma, alpha, beta, zeta, fmt):
    """Reproduce the bundled fund-evaluation study and compare with its published values."""
    result = cs.run_case_study(gamma=gamma, alpha=alpha, beta=beta, zeta=zeta)
    if fmt == "json":
        doc = {
            "all_passed": result.all_passed,
            "rows": [
                {
                    "name": r.name,
                    "computed": list(r.computed),
                    "published": list(r.published),
                    "delta": r.delta,
                    "tolerance": r.tolerance,
                    "passed": r.passed,
                }
                for r in result.rows
            ],
            "fused_ranking": cs.format_ranking(result.fused_ranking),
        }
        click.echo(json.dumps(doc, indent=2))
    else:
        width = max(len(r.name) for r in result.rows)
        for r in result.rows:
            mark = "PASS" if r.passed else "FAIL"
            if r.exact:
                comp = cs.format_ranking(r.computed)
                pub = cs.format_ranking(r.published)
                click.echo(f"{mark}  {r.name:<{width}}  computed {comp}  published {pub}")
            else:
                comp = ", ".join(f"{v:.4f}" for v in r.computed)
                pub = ", ".join(f"{v:.4f}" for v in r.published)
                click.echo(
                    f"{mark}  {r.name:<{width}}  delta={r.delta:.4f} (tol {r.tolerance:g})  "
                    f"computed [{comp}]  published [{pub}]"
                )
        click.echo(f"Ranking: {cs.format_ranking(result.fused_ranking)}")
        click.echo("Reproduction " + ("PASSED" if result.all_passed else "FAILED"))
    sys.exit(0 if result.all_passed else 3)


if __name__ == "__main__":
    main()
