"""Command-line front end.

Subcommands: membership, starlike, coeffs, solve, verify. Exit codes are
stable across all of them: 0 = property holds / solve succeeded, 1 = property
numerically violated (report carries the witness), 2 = usage or input error.
Reports are byte-identical across runs for identical inputs and seed; one
global seed is expanded into per-task seeds by trigcut.seeding.derive_seeds.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from .maxcut import brute_force_opt, load_graph
from .report import CertificateReport, fmt
from .sdp import elliptope_maximize, hyperplane_rounding
from .seeding import derive_seeds
from .series import taylor_coeffs
from .symmetric import read_matrix, sample_elliptope
from .trigmap import TaCandidate, arcsin_map, starlike_ray_scan, ta_membership
from .verify import SUITE_NAMES, run_suite


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters; numeric overrides are checked against the
    preconditions of the operations they feed before any dispatch."""

    subcommand: str
    inputs: tuple[str, ...]
    seed: int = 42
    tol: float | None = None
    grid: int | None = None
    samples: int | None = None
    max_order: int | None = None
    rank: int | None = None
    restarts: int = 5
    output: str | None = None
    method: str = "brute"
    form: str = "cut-value"
    random_spec: tuple[int, int] | None = None
    lam: float | None = None
    suite: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cfg = cls(
            subcommand=args.command,
            inputs=tuple(getattr(args, "inputs", ()) or ()),
            seed=args.seed,
            tol=getattr(args, "tol", None),
            grid=getattr(args, "grid", None),
            samples=getattr(args, "samples", None),
            max_order=getattr(args, "max_order", None),
            rank=getattr(args, "rank", None),
            restarts=getattr(args, "restarts", 5),
            output=getattr(args, "output", None),
            method=getattr(args, "method", "brute"),
            form=getattr(args, "form", "cut-value"),
            random_spec=tuple(args.random) if getattr(args, "random", None) else None,
            lam=getattr(args, "lam", None),
            suite=getattr(args, "suite", None),
        )
        if cfg.tol is not None and cfg.tol < 0:
            raise ValueError("--tol must be nonnegative")
        if cfg.grid is not None and cfg.grid < 2:
            raise ValueError("--grid must be at least 2")
        if cfg.samples is not None and cfg.samples < 1:
            raise ValueError("--samples must be at least 1")
        if cfg.max_order is not None and cfg.max_order < 1:
            raise ValueError("--max-order must be at least 1")
        if cfg.rank is not None and cfg.rank < 1:
            raise ValueError("--rank must be at least 1")
        if cfg.restarts < 1:
            raise ValueError("--restarts must be at least 1")
        if cfg.random_spec is not None:
            n, count = cfg.random_spec
            if n < 1 or count < 1:
                raise ValueError("--random needs a positive dimension and count")
        return cfg


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigcut",
        description="Membership, star-likeness and sandwich certification for the "
        "trigonometric approximation of the cut polytope.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=42, help="global seed (default 42)")
        p.add_argument("--output", help="write the report to a file instead of stdout")

    p_member = sub.add_parser("membership", help="test a matrix file for membership")
    p_member.add_argument("inputs", nargs=1, metavar="MATRIX")
    p_member.add_argument("--tol", type=float, default=None)
    common(p_member)

    p_star = sub.add_parser("starlike", help="scan segments to the identity")
    p_star.add_argument("inputs", nargs="*", metavar="MATRIX")
    p_star.add_argument("--random", nargs=2, type=int, metavar=("N", "COUNT"),
                        help="scan COUNT sampled members of dimension N instead of files")
    p_star.add_argument("--grid", type=int, default=None, help="lambda grid size (default 101)")
    p_star.add_argument("--tol", type=float, default=None)
    common(p_star)

    p_coeffs = sub.add_parser("coeffs", help="print series coefficients")
    p_coeffs.add_argument("lam", type=float, metavar="LAMBDA")
    p_coeffs.add_argument("--max-order", dest="max_order", type=int, default=None,
                          help="highest coefficient index (default 400)")
    common(p_coeffs)

    p_solve = sub.add_parser("solve", help="solve a graph instance")
    p_solve.add_argument("inputs", nargs=1, metavar="GRAPH")
    p_solve.add_argument("--method", choices=("brute", "sdp", "round"), default="brute")
    p_solve.add_argument("--form", choices=("cut-value", "quadratic"), default="cut-value")
    p_solve.add_argument("--rank", type=int, default=None)
    p_solve.add_argument("--restarts", type=int, default=5)
    p_solve.add_argument("--samples", type=int, default=None,
                         help="rounding samples (default 10000)")
    p_solve.add_argument("--tol", type=float, default=None)
    common(p_solve)

    p_verify = sub.add_parser("verify", help="run a certification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--grid", type=int, default=None,
                          help="lambda grid size (suite-specific default)")
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--samples", type=int, default=None,
                          help="sampled points (Monte Carlo samples for 'rounding')")
    p_verify.add_argument("--max-order", dest="max_order", type=int, default=None)
    p_verify.add_argument("--restarts", type=int, default=5)
    common(p_verify)

    return parser


def _cmd_membership(cfg: RunConfig) -> tuple[list[str], bool]:
    candidate = TaCandidate(read_matrix(cfg.inputs[0]))
    verdict = ta_membership(candidate, cfg.tol)
    lines = [
        "trigcut-membership v1",
        f"source {cfg.inputs[0]}",
        f"in_ta {fmt(verdict.in_ta)}",
        f"preimage_min_eigenvalue {fmt(verdict.preimage_min_eigenvalue)}",
        f"tolerance {fmt(verdict.tolerance_used)}",
        f"clamped_entries {candidate.clamped_entries}",
    ]
    return lines, verdict.in_ta


def _cmd_starlike(cfg: RunConfig) -> tuple[list[str], bool]:
    grid_size = cfg.grid if cfg.grid is not None else 101
    candidates: list[tuple[str, TaCandidate]] = []
    if cfg.random_spec is not None:
        n, count = cfg.random_spec
        for i, child in enumerate(derive_seeds(cfg.seed, count)):
            point = sample_elliptope(n, n, child)
            candidates.append((f"random-{i}-seed-{child}", TaCandidate(arcsin_map(point.matrix))))
    for path in cfg.inputs:
        candidates.append((path, TaCandidate(read_matrix(path))))
    if not candidates:
        raise ValueError("starlike needs a matrix file or --random N COUNT")
    per_point = []
    witnesses = []
    for label, candidate in candidates:
        scan = starlike_ray_scan(candidate, grid_size, cfg.tol)
        per_point.append(min(v.preimage_min_eigenvalue for v in scan.verdicts))
        for lam, verdict in zip(scan.lambda_grid, scan.verdicts):
            if not verdict.in_ta:
                witnesses.append(
                    f"input={label} lambda={fmt(lam)} "
                    f"min_eigenvalue={fmt(verdict.preimage_min_eigenvalue)}"
                )
    report = CertificateReport(
        kind="starlike",
        passed=not witnesses,
        seed=cfg.seed,
        grid=tuple(float(g) for g in np.linspace(0.0, 1.0, grid_size)),
        point_values=tuple(per_point),
        stats=(("min_eigenvalue", min(per_point)),),
        witnesses=tuple(witnesses),
    )
    return report.to_text().splitlines(), report.passed


def _cmd_coeffs(cfg: RunConfig) -> tuple[list[str], bool]:
    table = taylor_coeffs(cfg.lam, cfg.max_order if cfg.max_order is not None else 400)
    lines = [f"{i} {fmt(float(c))}" for i, c in enumerate(table.coeffs)]
    return lines, True


def _cmd_solve(cfg: RunConfig) -> tuple[list[str], bool]:
    inst = load_graph(cfg.inputs[0], cfg.form)
    value_name = "cut_value" if cfg.form == "cut-value" else "objective"
    lines = [
        "trigcut-solve v1",
        f"graph {cfg.inputs[0]}",
        f"form {cfg.form}",
        f"method {cfg.method}",
        f"n {inst.n}",
    ]
    if cfg.method == "brute":
        result = brute_force_opt(inst)
        lines.append(f"optimum_{value_name} {fmt(inst.constant + result.optimum)}")
        lines.append("argmax " + " ".join("%+d" % v for v in result.argmax))
        lines.append(f"evaluations {result.evaluations}")
        return lines, True
    solver_kwargs = {"rank": cfg.rank, "seed": cfg.seed, "restarts": cfg.restarts}
    if cfg.tol is not None:
        solver_kwargs["tol"] = cfg.tol
    sol = elliptope_maximize(inst, **solver_kwargs)
    lines.append(f"relaxation_bound_{value_name} {fmt(inst.constant + sol.value)}")
    lines.append(f"converged {fmt(sol.convergence.converged)}")
    lines.append(f"iterations {sol.convergence.iterations}")
    lines.append(f"gradient_norm {fmt(sol.convergence.gradient_norm)}")
    if cfg.method == "round":
        samples = cfg.samples if cfg.samples is not None else 10_000
        rounding = hyperplane_rounding(sol, samples, cfg.seed)
        lines.append(f"samples {rounding.samples}")
        lines.append(f"best_{value_name} {fmt(inst.constant + rounding.best_value)}")
        lines.append("best_cut " + " ".join("%+d" % v for v in rounding.best_cut))
    return lines, True


def _cmd_verify(cfg: RunConfig) -> tuple[list[str], bool]:
    overrides: dict = {}
    if cfg.suite != "coeffs":
        overrides["seed"] = cfg.seed
    if cfg.suite in ("lemma", "starlike"):
        if cfg.grid is not None:
            overrides["grid_points"] = cfg.grid
        if cfg.tol is not None:
            overrides["tol"] = cfg.tol
        if cfg.samples is not None:
            overrides["points"] = cfg.samples
    elif cfg.suite == "coeffs":
        if cfg.grid is not None:
            overrides["grid_points"] = cfg.grid
        if cfg.max_order is not None:
            overrides["max_order"] = cfg.max_order
    elif cfg.suite == "sandwich":
        overrides["restarts"] = cfg.restarts
        if cfg.samples is not None:
            overrides["instances"] = cfg.samples
    elif cfg.suite == "hull":
        if cfg.samples is not None:
            overrides["points"] = cfg.samples
    elif cfg.suite == "rounding":
        if cfg.samples is not None:
            overrides["samples"] = cfg.samples
    report = run_suite(cfg.suite, **overrides)
    return report.to_text().splitlines(), report.passed


_COMMANDS = {
    "membership": _cmd_membership,
    "starlike": _cmd_starlike,
    "coeffs": _cmd_coeffs,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage diagnostics
        return int(exc.code or 0)
    try:
        cfg = RunConfig.from_args(args)
        lines, ok = _COMMANDS[cfg.subcommand](cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(lines) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
