#!/usr/bin/env python3
"""
growthlab command line
- growth tables, growth-rate bounds and quotient comparison
- witness certificates, witness search, H_(v,w) stabilization
- commutator depth tables and the nilpotent-degree constants
- marked balls, convergence radius, limit-growth experiment

Artifacts go to stdout (or --output), logs to stderr.
Exit codes: 0 ok, 2 parse error, 3 assertion/collision, 4 budget, 5 internal.
"""
import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Tuple

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from certificates.bounds import crosscheck_metabelian, degree_bound
from certificates.stabilization import hvw_stabilization
from certificates.witness import WitnessSearchReport, check_certificate_against_table, verify_witness, witness_search
from cli.emit import csv_text, json_list_text, json_text, write_artifact
from cli.spec_parser import parse_spec
from core_groups.realization import make_realization
from freecalc.weights import verify_depth_bound
from growth_engine.ball import enumerate_ball
from growth_engine.growth import check_submultiplicative, compare_quotient, growth_table, omega_bounds
from shared.config import OutputFormat, RunConfig, load_config
from shared.errors import BallCapExceeded, GrowthLabError
from shared.schemas import ConvergenceReport, GrowthReport, GrowthRow, IsomorphismReport
from topology.convergence import LimitGrowthRow, convergence_radius, grigorchuk_prefix_sequence, limit_growth_experiment
from topology.marked_ball import balls_isomorphic, extract_marked_ball, to_dot

logger = logging.getLogger("GrowthLabCLI")

EXIT_OK, EXIT_PARSE, EXIT_ASSERTION, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4, 5

Result = Tuple[str, int]


def _format(config: RunConfig, allowed=(OutputFormat.CSV, OutputFormat.JSON)) -> OutputFormat:
    if config.output_format not in allowed:
        logger.warning(f"Format {config.output_format.value} not available here, using {allowed[0].value}")
        return allowed[0]
    return config.output_format


def _single(model, config: RunConfig) -> str:
    """One-row CSV or the JSON document of a flat report."""
    if _format(config) == OutputFormat.JSON:
        return json_text(model)
    row = model.model_dump()
    return csv_text([row], list(row))


# ── growth engine ────────────────────────────────────────────────────────
def cmd_growth(args, config: RunConfig) -> Result:
    spec = parse_spec(args.group)
    r = make_realization(spec)
    complete = True
    try:
        ball = enumerate_ball(r, args.radius, config.cap, config.workers)
    except BallCapExceeded as e:
        logger.warning(f"⚠️  {e}; emitting the table up to radius {e.partial.radius}")
        ball, complete = e.partial, False

    table = growth_table(ball)
    estimate = omega_bounds(table, config.precision) if table.radius >= 1 else None
    rows = [
        GrowthRow(
            n=n,
            sphere=table.spheres[n],
            gamma=table.gamma[n],
            naive=estimate.naive_at(n) if estimate and n else None,
            upper=estimate.upper_at(n) if estimate and n else None,
        )
        for n in range(table.radius + 1)
    ]
    violations = check_submultiplicative(table)
    logger.info(f"📈 {spec.render()}: gamma({table.radius}) = {table.gamma[-1]}")

    if _format(config) == OutputFormat.JSON:
        report = GrowthReport(
            group=spec.render(),
            radius=table.radius,
            complete=complete,
            rows=rows,
            entropy_upper=estimate.entropy_upper if estimate else None,
        )
        text = json_text(report)
    else:
        text = csv_text([row.model_dump() for row in rows], ["n", "sphere", "gamma", "naive", "upper"])

    if not complete:
        return text, EXIT_BUDGET
    return text, EXIT_ASSERTION if violations else EXIT_OK


def cmd_omega(args, config: RunConfig) -> Result:
    spec = parse_spec(args.group)
    table = growth_table(enumerate_ball(make_realization(spec), args.radius, config.cap, config.workers))
    estimate = omega_bounds(table, config.precision)
    logger.info(f"{spec.render()}: omega <= {estimate.upper_at(table.radius)}, h <= {estimate.entropy_upper}")
    if _format(config) == OutputFormat.JSON:
        return json_text(estimate), EXIT_OK
    rows = [{"n": n, "naive": estimate.naive_at(n), "upper": estimate.upper_at(n)} for n in range(1, table.radius + 1)]
    return csv_text(rows, ["n", "naive", "upper"]), EXIT_OK


def cmd_quotient(args, config: RunConfig) -> Result:
    group, quotient = parse_spec(args.group), parse_spec(args.quotient)
    rg, rq = make_realization(group), make_realization(quotient)
    report = compare_quotient(
        growth_table(enumerate_ball(rg, args.radius, config.cap, config.workers)),
        growth_table(enumerate_ball(rq, args.radius, config.cap, config.workers)),
        config.precision,
    )
    if _format(config) == OutputFormat.JSON:
        text = json_text(report)
    else:
        text = csv_text([row.model_dump() for row in report.rows], ["n", "gamma_group", "gamma_quotient", "holds"])
    return text, EXIT_OK if report.ok else EXIT_ASSERTION


# ── certificates ─────────────────────────────────────────────────────────
def cmd_witness(args, config: RunConfig) -> Result:
    r = make_realization(parse_spec(args.group))
    certificate = verify_witness(r, r.parse_word(args.v), r.parse_word(args.w), args.p_max, config.cap, config.precision)
    code = EXIT_OK if certificate.injective else EXIT_ASSERTION
    if certificate.injective and args.check_radius:
        table = growth_table(enumerate_ball(r, args.check_radius, config.cap, config.workers))
        failures = check_certificate_against_table(certificate, table)
        certificate = certificate.model_copy(update={"gamma_lower_checked": not failures})
        if failures:
            code = EXIT_ASSERTION
    return _single(certificate, config), code


def cmd_witness_search(args, config: RunConfig) -> Result:
    spec = parse_spec(args.group)
    certificate = witness_search(make_realization(spec), args.max_word_len, args.p_max, config.cap, config.precision)
    report = WitnessSearchReport(
        group=spec.render(),
        max_word_len=args.max_word_len,
        p_max=args.p_max,
        found=certificate is not None,
        certificate=certificate,
    )
    if _format(config) == OutputFormat.JSON:
        return json_text(report), EXIT_OK
    row = {"group": report.group, "found": report.found}
    row.update(certificate.model_dump() if certificate else {})
    columns = ["group", "found", "v", "w", "cost", "p_verified", "omega_lower", "bound_label"]
    return csv_text([row], columns), EXIT_OK


def cmd_hvw(args, config: RunConfig) -> Result:
    r = make_realization(parse_spec(args.group))
    report = hvw_stabilization(
        r,
        r.parse_word(args.v),
        r.parse_word(args.w),
        args.L_max,
        mode="heuristic" if args.heuristic else "auto",
        budget=min(config.cap, args.budget),
    )
    return _single(report, config), EXIT_OK


def cmd_degree_bound(args, config: RunConfig) -> Result:
    return _single(degree_bound(args.d, config.precision), config), EXIT_OK


def cmd_crosscheck(args, config: RunConfig) -> Result:
    r = make_realization(parse_spec(args.group))
    report = crosscheck_metabelian(
        r, args.radius, args.p_max, args.max_word_len, config.cap, config.workers, config.precision
    )
    if _format(config) == OutputFormat.JSON:
        text = json_text(report)
    else:
        row = report.model_dump(exclude={"witness"})
        text = csv_text([row], list(row))
    return text, EXIT_ASSERTION if report.status == "FAILED" else EXIT_OK


def cmd_commutators(args, config: RunConfig) -> Result:
    report = verify_depth_bound(args.k, args.n, config.cap)
    if _format(config) == OutputFormat.JSON:
        text = json_text(report)
    else:
        text = csv_text([row.model_dump() for row in report.rows], ["i", "set_size", "depth", "f_i", "equal"])
    return text, EXIT_OK if report.ok else EXIT_ASSERTION


# ── topology ─────────────────────────────────────────────────────────────
def cmd_ball_iso(args, config: RunConfig) -> Result:
    a, b = parse_spec(args.group_a), parse_spec(args.group_b)
    same = balls_isomorphic(
        extract_marked_ball(make_realization(a), args.radius, config.cap, config.workers),
        extract_marked_ball(make_realization(b), args.radius, config.cap, config.workers),
    )
    report = IsomorphismReport(group_a=a.render(), group_b=b.render(), radius=args.radius, isomorphic=same)
    return _single(report, config), EXIT_OK


def cmd_converge(args, config: RunConfig) -> Result:
    a, b = parse_spec(args.group_a), parse_spec(args.group_b)
    radius = convergence_radius(a, b, args.max_radius, config.cap, config.workers)
    report = ConvergenceReport(group_a=a.render(), group_b=b.render(), max_radius=args.max_radius, conv_radius=radius)
    return _single(report, config), EXIT_OK


def cmd_limit_growth(args, config: RunConfig) -> Result:
    limit = parse_spec(args.limit)
    if args.sequence:
        sequence = [parse_spec(text) for text in args.sequence]
    else:
        sequence = grigorchuk_prefix_sequence(limit.period or "012", args.count)
    rows = limit_growth_experiment(limit, sequence, args.m, config.cap, config.workers, config.precision)
    columns = ["i", "conv_radius", "gamma_i_m", "gamma_lim_m", "upper_i_m"]
    if _format(config) == OutputFormat.JSON:
        text = json_list_text(rows, LimitGrowthRow)
    else:
        text = csv_text([row.model_dump() for row in rows], columns)
    return text, EXIT_OK


def cmd_marked_ball(args, config: RunConfig) -> Result:
    spec = parse_spec(args.group)
    ball = extract_marked_ball(make_realization(spec), args.radius, config.cap, config.workers)
    logger.info(f"{spec.render()}: {ball.size} vertices, {len(ball.edges)} edges")
    return to_dot(ball, title=spec.render()), EXIT_OK


# ── parser ───────────────────────────────────────────────────────────────
COMMANDS: Dict[str, Callable] = {
    "growth": cmd_growth,
    "omega": cmd_omega,
    "quotient": cmd_quotient,
    "witness": cmd_witness,
    "witness-search": cmd_witness_search,
    "hvw": cmd_hvw,
    "paper-bound": cmd_degree_bound,
    "crosscheck-t24": cmd_crosscheck,
    "commutators": cmd_commutators,
    "ball-iso": cmd_ball_iso,
    "converge": cmd_converge,
    "lemma71": cmd_limit_growth,
    "marked-ball": cmd_marked_ball,
}

# descriptive names accepted for the same commands
ALIASES: Dict[str, List[str]] = {
    "paper-bound": ["degree-bound"],
    "crosscheck-t24": ["crosscheck-metabelian"],
    "lemma71": ["limit-growth"],
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default flag values")
    common.add_argument("--cap", type=int, help="maximum elements held by one enumeration")
    common.add_argument("--workers", type=int, help="concurrent workers per BFS layer")
    common.add_argument("--precision", type=int, help="significant digits for roots and logarithms (>= 12)")
    common.add_argument("--out", choices=[f.value for f in OutputFormat], help="artifact format")
    common.add_argument("--output", help="write the artifact here instead of stdout")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="growthlab", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, aliases=ALIASES.get(name, []), parents=[common], help=help_text, description=help_text)
        p.set_defaults(handler=COMMANDS[name])
        return p

    p = command("growth", "growth table gamma(n) with naive and certified upper rate bounds")
    p.add_argument("--group", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = command("omega", "growth-rate bounds per radius")
    p.add_argument("--group", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = command("quotient", "compare a group with a declared quotient on matching generators")
    p.add_argument("--group", required=True)
    p.add_argument("--quotient", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = command("witness", "check the words t(alpha) built from v, w for injectivity")
    p.add_argument("--group", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--p-max", type=int, default=10)
    p.add_argument("--check-radius", type=int, default=0, help="also compare against gamma up to this radius")

    p = command("witness-search", "cheapest injective witness pair")
    p.add_argument("--group", required=True)
    p.add_argument("--max-word-len", type=int, default=2)
    p.add_argument("--p-max", type=int, default=8)

    p = command("hvw", "stabilization of the conjugates v^-l w v^l")
    p.add_argument("--group", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--L-max", dest="L_max", type=int, default=5)
    p.add_argument("--heuristic", action="store_true", help="skip the exact lamplighter mode")
    p.add_argument("--budget", type=int, default=200_000, help="closure size limit in heuristic mode")

    p = command("paper-bound", "uniform growth constants for nilpotency degree d")
    p.add_argument("--d", type=int, required=True)

    p = command("crosscheck-t24", "confirm omega >= 2^(1/48) on a metabelian non-polycyclic group")
    p.add_argument("--group", required=True)
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--p-max", type=int, default=8)
    p.add_argument("--max-word-len", type=int, default=2)

    p = command("commutators", "weight-set sizes and depths against f(i)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = command("ball-iso", "are the marked balls of radius n isomorphic")
    p.add_argument("--group-a", required=True)
    p.add_argument("--group-b", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = command("converge", "largest radius with isomorphic marked balls")
    p.add_argument("--group-a", required=True)
    p.add_argument("--group-b", required=True)
    p.add_argument("--max-radius", type=int, required=True)

    p = command("lemma71", "gamma(m) along a sequence converging to a limit group")
    p.add_argument("--limit", required=True)
    p.add_argument("--sequence", nargs="+", help="member specs; default is the prefix-perturbed Grigorchuk sequence")
    p.add_argument("--count", type=int, default=4, help="length of the default sequence")
    p.add_argument("--m", type=int, required=True)

    p = command("marked-ball", "DOT export of a marked ball")
    p.add_argument("--group", required=True)
    p.add_argument("--radius", type=int, required=True)

    return parser


def dispatch(args: argparse.Namespace, config: RunConfig) -> int:
    text, code = args.handler(args, config)
    write_artifact(text, config.output_path)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s [%(levelname)s] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    default_format = OutputFormat.DOT.value if args.command == "marked-ball" else None
    try:
        config = load_config(
            args.config,
            {
                "cap": args.cap,
                "workers": args.workers,
                "precision": args.precision,
                "output_format": args.out or default_format,
                "output_path": args.output,
                "log_level": "DEBUG" if args.verbose else None,
            },
        )
        logging.getLogger().setLevel(config.log_level)
        return dispatch(args, config)
    except GrowthLabError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"❌ Internal error: {e}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
