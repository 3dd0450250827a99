"""
命令行入口

    pdrf allocate SCENARIO [--algo drf|edrf|pdrf] [--drf-no-removal] [--finishing-pass]
                           [--trace PATH] [--output PATH]
    pdrf compare SCENARIO [--reference NAME] [--candidate NAME] [--json]
    pdrf bench [--preset NAME] [--users N] [--resources M] [--demands LO:HI] [--reserves LO:HI]
               [--trials T] [--seed S] [--out DIR] [--workers W] [--[no-]strict-paper]
               [--finishing-pass] [--float-study] [--timings]
    pdrf cycles SCENARIO [--decompose] [--json]
    pdrf pareto-demo [--json]

SCENARIO 为 "-" 时从标准输入读取。
退出码：0 成功，1 用法错误，2 输入不合法，3 读写失败。
"""

import argparse
import asyncio
import sys
from pathlib import Path
from typing import Any, Optional, Sequence, Tuple

from pydantic import ValidationError

from application.allocation.commands import AllocateScenarioCommand, AllocationOutcome
from application.allocation.queries import (
    AnalyzeCyclesQuery,
    CompareAllocationsQuery,
    CycleAnalysis,
    ComparisonOutcome,
    ParetoDemoOutcome,
    ParetoDemoQuery,
)
from application.experiments.commands import BenchmarkOutcome, RunBenchmarkCommand
from domain.allocation import ALLOCATOR_NAMES
from domain.experiments import PRESETS
from infrastructure.behaviors import (
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ApplicationException,
    ValidationException,
)
from infrastructure.config import get_settings
from infrastructure.containers import bootstrap
from infrastructure.export import format_table
from infrastructure.logging import configure_logging, get_logger, set_run_id
from infrastructure.serialization import (
    allocation_to_dict,
    decomposition_to_dict,
    deltas_to_dict,
    divisible_to_dict,
    dumps,
    format_trace,
    fraction_text,
    pdrf_to_dict,
    profile_to_dict,
    schedule_to_dict,
    trace_to_dict,
    with_schema,
)

logger = get_logger(__name__)


class UsageError(Exception):
    pass


class CliArgumentParser(argparse.ArgumentParser):
    """用法错误以退出码 1 结束（argparse 默认是 2，与验证错误冲突）"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def interval(text: str) -> Tuple[int, int]:
    """解析 "lo:hi" 闭区间"""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got '{text}'") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"interval lower bound {lo} exceeds upper bound {hi}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = CliArgumentParser(
        prog="pdrf",
        description="Multi-resource fair allocation: DRF, EDRF and precomputed DRF.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    allocate = sub.add_parser("allocate", help="allocate a scenario file")
    allocate.add_argument("scenario", help="scenario JSON file, '-' for stdin")
    allocate.add_argument("--algo", choices=("drf", "edrf", "pdrf"), default="drf")
    allocate.add_argument("--drf-no-removal", action="store_true",
                          help="stop at the first task that does not fit instead of skipping saturated users")
    allocate.add_argument("--finishing-pass", action="store_true",
                          help="pdrf only: grant at most one extra task per user in ascending share order")
    allocate.add_argument("--trace", metavar="PATH", help="drf only: write the execution trace to PATH")
    allocate.add_argument("--output", metavar="PATH", help="write the result document to PATH instead of stdout")

    compare = sub.add_parser("compare", help="per-user task deltas between two allocators")
    compare.add_argument("scenario")
    compare.add_argument("--reference", choices=ALLOCATOR_NAMES, default="drf")
    compare.add_argument("--candidate", choices=ALLOCATOR_NAMES, default="pdrf")
    compare.add_argument("--json", action="store_true")

    bench = sub.add_parser("bench", help="random-scenario experiments, drf versus pdrf")
    bench.add_argument("--preset", choices=tuple(PRESETS))
    bench.add_argument("--users", type=int)
    bench.add_argument("--resources", type=int)
    bench.add_argument("--demands", type=interval, metavar="LO:HI")
    bench.add_argument("--reserves", type=interval, metavar="LO:HI")
    bench.add_argument("--trials", type=int)
    bench.add_argument("--seed", type=int)
    bench.add_argument("--out", metavar="DIR", help=f"output directory (default {settings.bench_output_dir})")
    bench.add_argument("--stem", help="output file name stem")
    bench.add_argument("--workers", type=int)
    bench.add_argument("--strict-paper", action=argparse.BooleanOptionalAction, default=None,
                       help="reference drf without saturated-user removal (default: the preset's reference, else removal)")
    bench.add_argument("--finishing-pass", action="store_true")
    bench.add_argument("--float-study", action="store_true",
                       help="count users whose float-computed pdrf task count differs from the exact one")
    bench.add_argument("--timings", action="store_true", help="include wall-clock seconds in the JSON export")

    cycles = sub.add_parser("cycles", help="cycle structure of the drf main loop")
    cycles.add_argument("scenario")
    cycles.add_argument("--decompose", action="store_true", help="experimental higher-order decomposition")
    cycles.add_argument("--json", action="store_true")

    demo = sub.add_parser("pareto-demo", help="the <59,19> counterexample in both drf modes")
    demo.add_argument("--json", action="store_true")

    return parser


# ========== 请求构造 ==========


def to_request(args: argparse.Namespace) -> Any:
    if args.command == "allocate":
        if args.trace and args.algo != "drf":
            raise UsageError("--trace only applies to --algo drf")
        if args.finishing_pass and args.algo != "pdrf":
            raise UsageError("--finishing-pass only applies to --algo pdrf")
        return AllocateScenarioCommand(
            scenario_path=args.scenario,
            algo=args.algo,
            remove_saturated=not args.drf_no_removal,
            finishing_pass=args.finishing_pass,
            collect_trace=bool(args.trace),
        )
    if args.command == "compare":
        return CompareAllocationsQuery(
            scenario_path=args.scenario, reference=args.reference, candidate=args.candidate
        )
    if args.command == "bench":
        if args.preset is None:
            missing = [
                f"--{name}" for name in ("users", "resources", "demands", "reserves")
                if getattr(args, name) is None
            ]
            if missing:
                raise UsageError(f"without --preset, {', '.join(missing)} must be given")
        return RunBenchmarkCommand(
            preset=args.preset,
            users=args.users,
            resources=args.resources,
            demands=args.demands,
            reserves=args.reserves,
            trials=args.trials,
            seed=args.seed,
            strict_paper=args.strict_paper,
            finishing_pass=args.finishing_pass,
            float_study=args.float_study,
            workers=args.workers,
            out_dir=args.out,
            stem=args.stem,
            include_timings=args.timings,
        )
    if args.command == "cycles":
        return AnalyzeCyclesQuery(scenario_path=args.scenario, decompose=args.decompose)
    return ParetoDemoQuery()


# ========== 输出 ==========


def render_allocation(outcome: AllocationOutcome) -> str:
    document = {"algo": outcome.algo}
    if outcome.divisible is not None:
        document["divisible"] = divisible_to_dict(outcome.divisible)
    if outcome.pdrf is not None:
        document["k"] = fraction_text(outcome.pdrf.k)
        document["pdrf"] = pdrf_to_dict(outcome.pdrf, outcome.scenario)
    if outcome.allocation is not None:
        document["allocation"] = allocation_to_dict(outcome.allocation, outcome.scenario)
    if outcome.trace is not None:
        summary = trace_to_dict(outcome.trace)
        summary.pop("steps")
        document["trace"] = summary
    return dumps(with_schema(document))


def render_comparison(outcome: ComparisonOutcome, as_json: bool) -> str:
    if as_json:
        return dumps(with_schema(deltas_to_dict(outcome.deltas, outcome.buckets)))
    width = max(4, *(len(u) for u in outcome.deltas))
    lines = [f"{'user':<{width}}  {'reference':>9}  {'candidate':>9}  {'delta':>5}"]
    for user_id, delta in outcome.deltas.items():
        lines.append(
            f"{user_id:<{width}}  {outcome.reference.tasks[user_id]:>9}  "
            f"{outcome.candidate.tasks[user_id]:>9}  {delta:>+5d}"
        )
    b = outcome.buckets
    lines.append(
        f"under: 1={b['under_1']} 2={b['under_2']} >2={b['under_gt2']} max={b['max_under']}  "
        f"over: 1={b['over_1']} 2={b['over_2']} >2={b['over_gt2']} max={b['max_over']}  "
        f"unchanged={b['unchanged']}"
    )
    return "\n".join(lines) + "\n"


def _counts(mapping) -> str:
    return ", ".join(f"{u}:{c}" for u, c in mapping.items())


def render_cycles(analysis: CycleAnalysis, as_json: bool) -> str:
    if as_json:
        document = {
            "profile": profile_to_dict(analysis.profile),
            "schedule": [schedule_to_dict(p) for p in analysis.schedule],
            "predicted_iterations": fraction_text(analysis.predicted_iterations),
            "selection_cost": analysis.selection_cost,
        }
        if analysis.decomposition is not None:
            document["decomposition"] = decomposition_to_dict(analysis.decomposition)
        return dumps(with_schema(document))

    profile = analysis.profile
    lines = [
        f"full cycle: {profile.full_length} step(s) ({_counts(profile.occurrences)}), "
        f"lcm(ds) = {fraction_text(profile.lcm_ds)}",
        f"basic subcycle: {profile.basic_length} step(s) ({_counts(profile.basic_occurrences)}), "
        f"ds* = {fraction_text(profile.max_share)} ({', '.join(profile.max_share_users)})",
    ]
    for pattern in analysis.schedule:
        if pattern.extra_positions:
            lines.append(
                f"  {pattern.user_id}: ratio {fraction_text(pattern.ratio)}, base {pattern.base}, "
                f"extra in subcycle(s) {list(pattern.extra_positions)} of {pattern.subcycles}, "
                f"gaps {list(pattern.gaps)}"
            )
    lines.append(
        f"predicted drf iterations: {fraction_text(analysis.predicted_iterations)} "
        f"(~{float(analysis.predicted_iterations):.1f}), selection cost {analysis.selection_cost:.2f}"
    )
    if analysis.decomposition is not None:
        lines.append("higher-order decomposition (experimental):")
        for index, layer in enumerate(analysis.decomposition.layers):
            lines.append(
                f"  layer {index}: users {list(layer.active_users)}, k = {fraction_text(layer.k)}, "
                f"{layer.iterations} iteration(s) of ({_counts(layer.occurrences)}), consumed {layer.consumed}"
            )
            if layer.deviates_from_basic:
                lines.append(
                    f"    counts differ from floor(ds*/ds) for {list(layer.deviates_from_basic)}: "
                    f"({_counts(layer.basic_occurrences)})"
                )
        lines.append(f"  residual {analysis.decomposition.residual}")
    return "\n".join(lines) + "\n"


def render_pareto(outcome: ParetoDemoOutcome, as_json: bool) -> str:
    if as_json:
        return dumps(with_schema({
            "strict": {"allocation": allocation_to_dict(outcome.strict), "trace": trace_to_dict(outcome.strict_trace)},
            "removal": {"allocation": allocation_to_dict(outcome.removal), "trace": trace_to_dict(outcome.removal_trace)},
            "extra_tasks": outcome.extra_tasks,
        }))

    scenario = outcome.scenario
    users = ", ".join(f"{u.id} {u.demand}" for u in scenario.users)
    lines = [f"scenario: resources {scenario.resources}, demands {users}"]
    for label, allocation, trace in (
        ("without saturated-user removal", outcome.strict, outcome.strict_trace),
        ("with saturated-user removal", outcome.removal, outcome.removal_trace),
    ):
        held = "  ".join(f"{u} {amounts}" for u, amounts in allocation.per_user_amounts.items())
        blocked = f", blocked at {trace.blocked_user}" if trace.blocked_user else ""
        lines.append(f"{label}: {trace.halt_reason.value} after {trace.iterations} iteration(s){blocked}")
        lines.append(f"  {held}  residual {allocation.residual}")
    extra = {u: n for u, n in outcome.extra_tasks.items() if n}
    if extra:
        lines.append(
            f"Pareto deficiency: residual {outcome.strict.residual} still admits "
            + ", ".join(f"{n} more task(s) for {u}" for u, n in extra.items())
        )
    return "\n".join(lines) + "\n"


def render_bench(outcome: BenchmarkOutcome) -> str:
    return format_table(outcome.stats) + f"wrote {outcome.files.table}\nwrote {outcome.files.document}\n"


# ========== 执行 ==========


async def dispatch(request: Any) -> Any:
    mediator = bootstrap().app.mediator()
    return await mediator.send_async(request)


def emit(args: argparse.Namespace, result: Any) -> None:
    if args.command == "allocate":
        text = render_allocation(result)
        if args.trace:
            Path(args.trace).write_text(format_trace(result.trace), encoding="utf-8")
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            return
    elif args.command == "compare":
        text = render_comparison(result, args.json)
    elif args.command == "cycles":
        text = render_cycles(result, args.json)
    elif args.command == "bench":
        text = render_bench(result)
    else:
        text = render_pareto(result, args.json)
    sys.stdout.write(text)


def fail(code: str, message: str, exit_code: int) -> int:
    print(f"error: {code}: {message}", file=sys.stderr)
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging("DEBUG" if args.verbose else None)
    set_run_id()

    try:
        request = to_request(args)
        result = asyncio.run(dispatch(request))
        emit(args, result)
    except UsageError as e:
        return fail("USAGE", str(e), EXIT_USAGE)
    except ValidationError as e:
        return fail("INVALID_REQUEST", ValidationException.from_pydantic(e, args.command).message, EXIT_VALIDATION)
    except ValidationException as e:
        return fail(e.code, e.message, EXIT_VALIDATION)
    except ApplicationException as e:
        return fail(e.error.code, e.error.message, e.error.exit_code)
    except OSError as e:
        return fail("IO_ERROR", str(e), EXIT_IO)
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
