"""Command line interface: encode, solve, factor, sweep and verify."""

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from bayesarith.config.logging import get_logger, setup_logging
from bayesarith.config.paths import get_exports_dir, get_reports_dir
from bayesarith.config.settings import MODES, PRICING_RULES, Settings
from bayesarith.core.errors import BayesArithError, UsageError
from bayesarith.core.labeling import role_table
from bayesarith.core.system import LpSystem, SystemCounts
from bayesarith.encoder.addition import AdditionSpec, build_addition
from bayesarith.encoder.counts import (
    addition_counts,
    factoring_counts,
    multiplication_counts,
    shifted_counts,
)
from bayesarith.encoder.multiplication import (
    FactoringSpec,
    MultiplicationSpec,
    build_factoring,
    build_multiplication,
    build_shifted_addition,
    shifted_data,
)
from bayesarith.encoder.stats import system_stats
from bayesarith.encoder.stream import stream_factoring_system
from bayesarith.factoring.driver import FactorStatus, factor
from bayesarith.factoring.sweep import sweep
from bayesarith.parser.lp_format import export, parse_objective, read_native
from bayesarith.report.claims import VerifyConfig, verify_all
from bayesarith.report.summary import (
    claims_table,
    has_mismatch,
    save_jsonl,
    sweep_table,
    write_jsonl,
)
from bayesarith.solver.lp import make_solver
from bayesarith.solver.lp import rank as lp_rank
from bayesarith.solver.simplex import verify_certificate
from bayesarith.solver.sparse import SparseMatrixSystem

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISCREPANCY = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def _settings(args: argparse.Namespace) -> Settings:
    settings = Settings.from_args(
        mode=args.mode,
        no_presolve=args.no_presolve,
        jobs=getattr(args, "jobs", None),
        pricing=getattr(args, "pricing", "bland"),
        prefer_bit=getattr(args, "prefer_bit", 1),
        exhaustive=getattr(args, "exhaustive", False),
        seed=getattr(args, "seed", None),
        tolerance=args.tolerance,
    )
    errors = settings.validate()
    if errors:
        raise UsageError("; ".join(errors))
    return settings


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _counts_line(counts: SystemCounts) -> str:
    return f"unknowns={counts.unknowns} equations={counts.equations}"


def _report_system(args: argparse.Namespace, lp: LpSystem) -> None:
    """Shared output of the encode commands."""
    counts = lp.counts()
    if args.output:
        data = export(SparseMatrixSystem.from_lp(lp), args.format)
        Path(args.output).write_bytes(data)
        get_logger().info(f"Wrote {len(data)} bytes to {args.output}")
    if args.stats:
        stats = system_stats(lp)
        payload = {"counts": counts.as_dict(), "sparsity": stats.as_dict()}
        text = "\n".join(
            [
                _counts_line(counts),
                f"positive={counts.positive} data={counts.data} "
                f"structural={counts.structural} universal={counts.universal}",
                f"nnz={stats.nnz} max_row={stats.max_row_nnz} "
                f"avg_row={stats.avg_row_nnz:.3f} max_col={stats.max_col_nnz}",
            ]
        )
        _emit(args, payload, text)
    elif not args.output:
        if args.json:
            equations = [str(c) for c in lp.constraints]
            print(json.dumps({"counts": counts.as_dict(), "equations": equations}))
        else:
            print(_counts_line(counts))
            for constraint in lp.constraints:
                print(f"  {constraint}    [{constraint.label}]")


def cmd_encode_add(args: argparse.Namespace) -> int:
    """Build the addition system S = U + V."""
    spec = AdditionSpec.from_values(args.n, u=args.u, v=args.v, s=args.s)
    lp = build_addition(spec)
    _report_system(args, lp)
    return EXIT_OK


def cmd_encode_mul(args: argparse.Namespace) -> int:
    """Build a multiplication, shifted-addition or factoring system."""
    if args.factor is not None and (args.n is not None or args.m is not None):
        raise UsageError("--factor sets the widths itself; drop --n and --m")
    if args.factor is None and (args.n is None or args.m is None):
        raise UsageError("give --n and --m, or --factor C")
    if args.stream is not None and args.factor is None:
        raise UsageError("--stream needs --factor")
    if args.rows and not args.shifted:
        raise UsageError("--rows needs --shifted")

    if args.formula_only:
        if args.factor is not None:
            counts = factoring_counts(args.factor.bit_length())
        elif args.shifted:
            counts = shifted_counts(args.n, args.m)
        else:
            n_data = sum(
                width
                for value, width in ((args.a, args.n), (args.b, args.m), (args.c, args.n + args.m))
                if value is not None
            )
            counts = multiplication_counts(args.n, args.m, n_data=n_data)
        _emit(args, counts.as_dict(), _counts_line(counts))
        return EXIT_OK

    if args.stream is not None:
        path = Path(args.stream) if args.stream else get_exports_dir() / f"factor-{args.factor}.txt"
        result = stream_factoring_system(args.factor, path)
        payload = {
            "path": str(result.path),
            "counts": result.counts.as_dict(),
            "nnz": result.nnz,
            "max_row_nnz": result.max_row_nnz,
            "seconds": round(result.seconds, 3),
        }
        text = (
            f"{_counts_line(result.counts)}\n"
            f"wrote {result.bytes_written} characters to {result.path} in {result.seconds:.1f}s"
        )
        _emit(args, payload, text)
        return EXIT_OK

    if args.factor is not None:
        lp = build_factoring(FactoringSpec(args.factor))
    elif args.shifted:
        data = shifted_data(args.n, args.m, args.rows) if args.rows else ()
        lp = build_shifted_addition(args.n, args.m, data)
    else:
        lp = build_multiplication(
            MultiplicationSpec.from_values(args.n, args.m, a=args.a, b=args.b, c=args.c)
        )
    _report_system(args, lp)
    return EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    """Run the bit-fixing procedure on one C."""
    settings = _settings(args)
    if args.value <= 3:
        raise UsageError(f"factor needs C > 3, got {args.value}")
    result = factor(args.value, settings)
    if args.json:
        record = result.to_record(include_trace=args.trace).model_dump()
        record["decisions"] = [
            {
                "bit": d.bit,
                "polarity": d.polarity,
                "objective": d.objective,
                "optimum": str(d.optimum),
                "reached": d.reached,
                "chosen": d.chosen,
            }
            for d in result.decisions
        ]
        print(json.dumps(record))
    else:
        print(result.describe())
        if args.verbose:
            for d in result.decisions:
                mark = "*" if d.chosen else " "
                print(f" {mark} bit {d.bit}={d.polarity}: max {d.objective} = {d.optimum}")
        if args.trace and result.trace is not None:
            trace = result.trace
            print(f"presolve: {len(trace.fixed)} fixed, {len(trace.substitutions)} aliased")
            for entry in trace.as_records():
                if "value" in entry:
                    print(f"  {entry['unknown']} = {entry['value']}")
                else:
                    print(f"  {entry['unknown']} -> {entry['alias']}")
    return EXIT_DISCREPANCY if result.status is FactorStatus.DISCREPANCY else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Factor every C in a range and compare with trial division."""
    settings = _settings(args)
    report = sweep(args.lo, args.hi, settings)
    if args.output:
        save_jsonl(report.rows, args.output)
    if args.json:
        write_jsonl(report.rows, sys.stdout)
        print(report.summary.model_dump_json())
    else:
        print(sweep_table(report.rows, report.summary))
    return EXIT_DISCREPANCY if report.discrepancies else EXIT_OK


def cmd_verify_counts(args: argparse.Namespace) -> int:
    """Compare built system sizes with the closed-form counts."""
    failures = []
    checks = 0

    def compare(name: str, built: SystemCounts, formula: SystemCounts) -> None:
        nonlocal checks
        checks += 1
        keys = ("unknowns", "positive", "structural", "universal")
        if any(getattr(built, k) != getattr(formula, k) for k in keys):
            failures.append(
                {"system": name, "built": built.as_dict(), "formula": formula.as_dict()}
            )

    for n in range(1, args.max_n + 1):
        compare(f"addition n={n}", build_addition(AdditionSpec(n)).counts(), addition_counts(n))
    for n in range(2, args.max_n + 1):
        for m in range(2, args.max_m + 1):
            compare(
                f"shifted n={n} m={m}",
                build_shifted_addition(n, m).counts(),
                shifted_counts(n, m),
            )
            compare(
                f"multiplication n={n} m={m}",
                build_multiplication(MultiplicationSpec(n, m)).counts(),
                multiplication_counts(n, m),
            )

    text = f"{checks} systems checked, " + (
        "all match" if not failures else f"{len(failures)} mismatches"
    )
    if failures and not args.json:
        text += "\n" + "\n".join(f"  {f['system']}" for f in failures)
    _emit(args, {"checks": checks, "mismatches": failures}, text)
    return EXIT_DISCREPANCY if failures else EXIT_OK


def cmd_verify_claims(args: argparse.Namespace) -> int:
    """Run the claim ledger and write it as JSON Lines."""
    config = VerifyConfig(
        count_only=args.count_only,
        add_max_n=args.add_max_n,
        mul_max=args.mul_max,
        composite_hi=args.composite_hi,
        sweep_hi=args.sweep_hi,
        settings=_settings(args),
    )
    if config.add_max_n < 2 or config.mul_max < 2:
        raise UsageError("--add-max-n and --mul-max must be at least 2")
    records = verify_all(config)
    output = Path(args.output) if args.output else get_reports_dir() / "claims.jsonl"
    save_jsonl(records, output)
    if args.json:
        write_jsonl(records, sys.stdout)
    else:
        print(claims_table(records))
        print(f"Report written to {output}")
    if has_mismatch(records):
        get_logger().warning(f"Claim mismatch recorded in {output}")
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    """Convert a native system file to another format."""
    system = read_native(Path(args.input))
    objective = parse_objective(args.objective, system.n_cols) if args.objective else None
    data = export(system, args.format, objective)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    """Feasibility, optimization or rank of a native system file."""
    settings = _settings(args)
    system = read_native(Path(args.input))
    if args.rank:
        value = lp_rank(system, settings.mode, settings.dense_threshold)
        _emit(args, {"rank": value}, f"rank={value}")
        return EXIT_OK

    solver = make_solver(system, settings.mode, settings.pricing, settings.float_tolerance)
    if args.objective:
        outcome = solver.maximize(parse_objective(args.objective, system.n_cols))
    else:
        outcome = solver.solve_feasibility()

    payload: dict = {"status": outcome.status.value, "exact": outcome.exact}
    lines = [f"status={outcome.status.value}"]
    if outcome.objective is not None:
        payload["objective"] = str(outcome.objective)
        lines.append(f"objective={outcome.objective}")
    if outcome.point is not None:
        nonzero = {col: str(v) for col, v in enumerate(outcome.point) if v != 0}
        payload["point"] = nonzero
        for col, value in nonzero.items():
            label = system.name(col)
            lines.append(f"  x{col} {label} = {value}")
    if outcome.certificate is not None:
        payload["certificate"] = [str(y) for y in outcome.certificate]
        payload["certificate_verified"] = verify_certificate(system, outcome.certificate)
        lines.append(f"certificate verified={payload['certificate_verified']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_roles(args: argparse.Namespace) -> int:
    """List the circuit bit carried by every variable index."""
    env = AdditionSpec(args.n).env if args.m is None else MultiplicationSpec(args.n, args.m).env
    rows = [(k, str(role)) for k, role in role_table(env)]
    text = "\n".join(f"X{k} = {role}" for k, role in rows)
    _emit(args, {f"X{k}": role for k, role in rows}, text)
    return EXIT_OK


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = _Parser(
        prog="bayesarith",
        description="Arithmetic circuits as linear programs over partial probabilities",
    )
    parser.add_argument(
        "--log-level",
        type=str,
        default="WARNING",
        help="Log level (DEBUG, INFO, WARNING, ERROR)",
    )
    parser.add_argument(
        "--log-file",
        type=str,
        help="Log file path (default: bayesarith.log in the data directory)",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="Print structured records instead of text",
    )
    parser.add_argument(
        "--mode",
        choices=MODES,
        default="exact",
        help="Solver arithmetic (default: exact)",
    )
    parser.add_argument(
        "--no-presolve",
        action="store_true",
        help="Skip product-rule presolve",
    )
    parser.add_argument(
        "--tolerance",
        type=float,
        help="Float-mode tolerance (default: 1e-9)",
    )

    subparsers = parser.add_subparsers(dest="command", help="Commands", parser_class=_Parser)

    def add_output_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--stats", action="store_true", help="Print sizes and sparsity")
        sub.add_argument("--output", type=str, help="Write the system to this file")
        sub.add_argument(
            "--format", choices=("native", "lp"), default="native", help="Output file format"
        )

    # encode-add command
    add_parser = subparsers.add_parser("encode-add", help="Build the addition system")
    add_parser.add_argument("--n", type=int, required=True, help="Operand width in bits")
    add_parser.add_argument("--u", type=int, help="Value of U")
    add_parser.add_argument("--v", type=int, help="Value of V")
    add_parser.add_argument("--s", type=int, help="Value of S (n+1 bits)")
    add_output_options(add_parser)

    # encode-mul command
    mul_parser = subparsers.add_parser("encode-mul", help="Build the multiplication system")
    mul_parser.add_argument("--n", type=int, help="Width of A")
    mul_parser.add_argument("--m", type=int, help="Width of B")
    mul_parser.add_argument("--a", type=int, help="Value of A")
    mul_parser.add_argument("--b", type=int, help="Value of B")
    mul_parser.add_argument("--c", type=int, help="Value of C (n+m bits)")
    mul_parser.add_argument("--factor", type=int, help="Build the factoring system of C")
    mul_parser.add_argument(
        "--shifted", action="store_true", help="Only the addition of m shifted rows"
    )
    mul_parser.add_argument(
        "--rows", type=int, nargs="+", help="Values of the m shifted rows U_0 .. U_{m-1}"
    )
    mul_parser.add_argument(
        "--stream",
        nargs="?",
        const="",
        help="Stream the factoring system to this file (default: the exports directory)",
    )
    mul_parser.add_argument(
        "--formula-only", action="store_true", help="Print closed-form counts without building"
    )
    add_output_options(mul_parser)

    # factor command
    factor_parser = subparsers.add_parser("factor", help="Run the bit-fixing procedure on C")
    factor_parser.add_argument("value", type=int, help="Integer C > 3")
    factor_parser.add_argument("--pricing", choices=PRICING_RULES, default="bland")
    factor_parser.add_argument(
        "--prefer-bit", type=int, choices=(0, 1), default=1, help="Bit value tried first"
    )
    factor_parser.add_argument(
        "--exhaustive", action="store_true", help="Backtrack into unexplored branches"
    )
    factor_parser.add_argument(
        "--verbose", "-v", action="store_true", help="Print every maximization"
    )
    factor_parser.add_argument(
        "--trace", action="store_true", help="Include the presolve fixings and aliases"
    )

    # sweep command
    sweep_parser = subparsers.add_parser("sweep", help="Factor a range and score it")
    sweep_parser.add_argument("lo", type=int, help="First C (>= 4)")
    sweep_parser.add_argument("hi", type=int, help="Last C")
    sweep_parser.add_argument("--jobs", "-j", type=int, help="Worker processes")
    sweep_parser.add_argument("--pricing", choices=PRICING_RULES, default="bland")
    sweep_parser.add_argument("--prefer-bit", type=int, choices=(0, 1), default=1)
    sweep_parser.add_argument("--exhaustive", action="store_true")
    sweep_parser.add_argument("--output", type=str, help="Write rows as JSON Lines")

    # verify-counts command
    counts_parser = subparsers.add_parser(
        "verify-counts", help="Check built sizes against the count formulas"
    )
    counts_parser.add_argument("--max-n", type=int, default=8)
    counts_parser.add_argument("--max-m", type=int, default=8)

    # verify-claims command
    claims_parser = subparsers.add_parser("verify-claims", help="Run the claim ledger")
    claims_parser.add_argument(
        "--count-only", action="store_true", help="Skip claims that need a solver"
    )
    claims_parser.add_argument("--output", type=str, help="JSON Lines report path")
    claims_parser.add_argument("--seed", type=int, help="Seed for random objective probing")
    claims_parser.add_argument("--add-max-n", type=int, default=16, help="Widest addition checked")
    claims_parser.add_argument(
        "--mul-max", type=int, default=12, help="Widest n and m of the multiplication checks"
    )
    claims_parser.add_argument(
        "--composite-hi", type=int, default=64, help="Factor every composite up to this C"
    )
    claims_parser.add_argument(
        "--sweep-hi", type=int, default=32, help="Upper end of the prime-feasibility sweep"
    )

    # export command
    export_parser = subparsers.add_parser("export", help="Convert a native system file")
    export_parser.add_argument("input", type=str, help="Native system file")
    export_parser.add_argument("--format", choices=("native", "lp"), default="lp")
    export_parser.add_argument("--objective", type=str, help='Objective such as "x3 + x5"')
    export_parser.add_argument("--output", type=str, help="Output file (default: stdout)")

    # solve command
    solve_parser = subparsers.add_parser("solve", help="Solve a native system file")
    solve_parser.add_argument("input", type=str, help="Native system file")
    solve_parser.add_argument("--rank", action="store_true", help="Print the rank only")
    solve_parser.add_argument("--objective", type=str, help='Maximize, e.g. "x3 + x5"')
    solve_parser.add_argument("--pricing", choices=PRICING_RULES, default="bland")

    # roles command
    roles_parser = subparsers.add_parser("roles", help="Name the bit behind every variable")
    roles_parser.add_argument("--n", type=int, required=True)
    roles_parser.add_argument("--m", type=int, help="Width of B (multiplication)")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.command is None:
        parser.print_help()
        return EXIT_OK

    setup_logging(
        level=args.log_level,
        log_file=Path(args.log_file) if args.log_file else None,
    )

    commands = {
        "encode-add": cmd_encode_add,
        "encode-mul": cmd_encode_mul,
        "factor": cmd_factor,
        "sweep": cmd_sweep,
        "verify-counts": cmd_verify_counts,
        "verify-claims": cmd_verify_claims,
        "export": cmd_export,
        "solve": cmd_solve,
        "roles": cmd_roles,
    }

    cmd_func = commands.get(args.command)
    if cmd_func is None:
        print(f"Unknown command: {args.command}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return cmd_func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BayesArithError as e:
        get_logger().error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
