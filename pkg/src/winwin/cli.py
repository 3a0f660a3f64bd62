"""Command-line interface.

Subcommands::

    winwin evaluate  SCENARIO [--paradigm all|ew|eu|ta] [--format human|json|csv]
    winwin solve     SCENARIO [--paradigm ew|eu|ta] [--format human|json]
    winwin sweep     SCENARIO --paradigm P --min A --max B --steps N
                              [--out FILE] [--plot FILE]
    winwin simulate  SCENARIO [--rounds K] [--trajectories N] [--seed S] [--insured]
    winwin limit     SCENARIO [--wealth-grid START:STOP:RATIO] [--plot FILE]

Exit codes: 0 success; 2 parse or validation failure; 3 domain failure
(bankruptcy at a point evaluation); 4 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .asymptotics import limit_series, residual_order_check, rothschild_stiglitz_trap
from .errors import (
    BankruptcyError,
    DegenerateFit,
    DomainError,
    NoRootInBracket,
    ParseError,
    ValidationError,
    WinWinError,
)
from .fees import FeeInterval, IntervalKind, break_even_fee, win_win_interval
from .gambles import Role, net_premium, owner_gamble
from .montecarlo import SimulationConfig, estimate_growth, multiplicative_factors, simulate
from .paradigms import Paradigm, time_growth_rate
from .reports import emit_sweep, emit_tables, render_tables, scenario_digest
from .scenario import Scenario, load_scenario

_FORMAT_RATE = "{:.12g}"


def _parse_paradigm(value: str) -> Paradigm:
    return Paradigm(value)


def _parse_wealth_grid(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValidationError("wealth-grid", "expected START:STOP:RATIO")
    try:
        start, stop, ratio = (float(part) for part in parts)
    except ValueError as exc:
        raise ValidationError("wealth-grid", f"not numeric: {spec!r}") from exc
    if start <= 0 or stop < start or ratio <= 1.0:
        raise ValidationError(
            "wealth-grid", "need 0 < START <= STOP and RATIO > 1"
        )
    grid = []
    wealth = start
    while wealth <= stop * (1.0 + 1e-12):
        grid.append(wealth)
        wealth *= ratio
    return grid


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="winwin",
        description="Evaluate one-shot insurance contracts under expected-wealth, "
        "expected-utility, and time-average growth criteria.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("evaluate", help="rate tables for both parties")
    evaluate.add_argument("scenario")
    evaluate.add_argument("--paradigm", choices=["all", "ew", "eu", "ta"], default="all")
    evaluate.add_argument("--format", choices=["human", "json", "csv"], default="human")

    solve = commands.add_parser("solve", help="break-even fees and the win-win range")
    solve.add_argument("scenario")
    solve.add_argument("--paradigm", choices=["ew", "eu", "ta"], default="ta")
    solve.add_argument("--format", choices=["human", "json"], default="human")

    sweep = commands.add_parser("sweep", help="delta-versus-fee grid as CSV")
    sweep.add_argument("scenario")
    sweep.add_argument("--paradigm", choices=["ew", "eu", "ta"], required=True)
    sweep.add_argument("--min", type=float, required=True, dest="fee_min")
    sweep.add_argument("--max", type=float, required=True, dest="fee_max")
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--out", help="write CSV here instead of standard output")
    sweep.add_argument("--plot", help="also render the sweep to this image file")

    simulate_cmd = commands.add_parser(
        "simulate", help="verify the growth rate by multiplicative repetition"
    )
    simulate_cmd.add_argument("scenario")
    simulate_cmd.add_argument("--rounds", type=int, default=10_000)
    simulate_cmd.add_argument("--trajectories", type=int, default=200)
    simulate_cmd.add_argument("--seed", type=int, default=0)
    simulate_cmd.add_argument(
        "--insured", action="store_true", help="simulate the insured owner instead"
    )

    limit = commands.add_parser(
        "limit", help="insurer growth delta scaled toward the expectation limit"
    )
    limit.add_argument("scenario")
    limit.add_argument("--wealth-grid", default="1e6:1e9:10")
    limit.add_argument("--plot", help="render the series to this image file")
    return parser


def _interval_bounds(interval: FeeInterval) -> dict:
    return {
        "kind": interval.kind.value,
        "lower": interval.lower,
        "upper": interval.upper,
    }


def _cmd_evaluate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    if args.paradigm == "all":
        paradigms = tuple(Paradigm)
    else:
        paradigms = (_parse_paradigm(args.paradigm),)
    tables = emit_tables(scenario, paradigms)
    if args.format == "human":
        sys.stdout.write(render_tables(tables))
    elif args.format == "json":
        document = {
            "scenario_sha256": scenario_digest(scenario),
            "tables": [table.to_dict() for table in tables],
        }
        sys.stdout.write(json.dumps(document, indent=2) + "\n")
    else:
        lines = ["paradigm,cell,value,unit,bankrupt"]
        for table in tables:
            for name, cell in table.cells().items():
                value = "" if cell.value is None else format(cell.value, ".17e")
                lines.append(
                    f"{table.paradigm.value},{name},{value},{table.unit.value},"
                    f"{1 if cell.bankrupt else 0}"
                )
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _guarded_break_even(paradigm, role, scenario: Scenario) -> tuple[float | None, str]:
    wealth = scenario.owner_wealth if role is Role.OWNER else scenario.insurer_wealth
    try:
        fee = break_even_fee(
            paradigm,
            role,
            scenario.venture,
            wealth,
            utility=scenario.utility,
        )
        return fee, ""
    except (BankruptcyError, DomainError, NoRootInBracket) as exc:
        return None, type(exc).__name__


def _cmd_solve(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    paradigm = _parse_paradigm(args.paradigm)
    premium = net_premium(scenario.contract, scenario.loss_probability)
    interval = win_win_interval(
        paradigm,
        scenario.venture,
        scenario.owner,
        scenario.insurer,
        utility=scenario.utility,
    )
    owner_fee, owner_note = _guarded_break_even(paradigm, Role.OWNER, scenario)
    insurer_fee, insurer_note = _guarded_break_even(paradigm, Role.INSURER, scenario)
    trap = rothschild_stiglitz_trap(
        scenario.venture, scenario.contract, scenario.insurer_wealth
    )

    if args.format == "json":
        document = {
            "paradigm": paradigm.value,
            "net_premium": premium,
            "owner_break_even": owner_fee,
            "insurer_break_even": insurer_fee,
            "win_win": _interval_bounds(interval),
            "proposed_fee": scenario.fee,
            "proposed_fee_in_win_win": interval.contains(scenario.fee),
            "expectation_trap": trap.applies,
        }
        sys.stdout.write(json.dumps(document, indent=2) + "\n")
        return 0

    def fee_text(fee: float | None, note: str) -> str:
        return _FORMAT_RATE.format(fee) if fee is not None else f"n/a ({note})"

    lines = [
        f"paradigm:            {paradigm.value}",
        f"net premium:         {_FORMAT_RATE.format(premium)}",
        f"owner break-even:    {fee_text(owner_fee, owner_note)}",
        f"insurer break-even:  {fee_text(insurer_fee, insurer_note)}",
    ]
    if interval.kind is IntervalKind.PROPER:
        lines.append(
            "win-win fee range:   "
            f"({_FORMAT_RATE.format(interval.lower)}, {_FORMAT_RATE.format(interval.upper)})"
        )
        inside = "inside" if interval.contains(scenario.fee) else "outside"
        lines.append(f"proposed fee:        {_FORMAT_RATE.format(scenario.fee)} ({inside})")
    elif interval.kind is IntervalKind.DEGENERATE:
        lines.append(
            f"win-win fee range:   degenerate at {_FORMAT_RATE.format(interval.lower)} "
            "(both deltas exactly zero; no strict win-win)"
        )
    else:
        lines.append("win-win fee range:   empty")
    if trap.applies:
        lines.append(
            "warning:             contract is attractive in expectation "
            f"(+{_FORMAT_RATE.format(trap.expectation_delta)}/month) but one loss "
            "bankrupts the insurer"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    sweep = emit_sweep(
        scenario,
        _parse_paradigm(args.paradigm),
        args.fee_min,
        args.fee_max,
        args.steps,
    )
    csv_text = sweep.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.plot:
        from .plots import save_sweep_plot

        save_sweep_plot(sweep, args.plot, proposed_fee=scenario.fee)
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    contract = scenario.contract if args.insured else None
    gamble = owner_gamble(scenario.venture, contract)
    factors = multiplicative_factors(gamble, scenario.owner_wealth)
    closed_form = time_growth_rate(gamble, scenario.owner_wealth).value
    config = SimulationConfig(
        rounds=args.rounds,
        trajectories=args.trajectories,
        seed=args.seed,
        initial_wealth=scenario.owner_wealth,
    )
    trajectories = simulate(config, factors, duration_per_round=scenario.duration_months)
    mean, se = estimate_growth(trajectories)
    gap = abs(mean - closed_form)
    lines = [
        "factors: " + ", ".join(f"{f:.12g} (p={q:.12g})" for f, q in factors),
        f"rounds={config.rounds} trajectories={config.trajectories} seed={config.seed}",
        f"estimated growth:  {_FORMAT_RATE.format(mean)} /month",
        f"standard error:    {_FORMAT_RATE.format(se)} /month",
        f"closed form:       {_FORMAT_RATE.format(closed_form)} /month",
        f"gap:               {_FORMAT_RATE.format(gap)}"
        + (f" ({gap / se:.2f} SE)" if se > 0 else " (zero-variance gamble)"),
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_limit(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    grid = _parse_wealth_grid(args.wealth_grid)
    rows = limit_series(scenario.venture, scenario.contract, grid)
    slope = residual_order_check(rows)
    premium = net_premium(scenario.contract, scenario.loss_probability)
    target = (scenario.fee - premium) / scenario.duration_months
    lines = [f"{'wealth':>14}  {'delta_g':>22}  {'scaled_delta':>18}  {'residual':>18}"]
    for row in rows:
        lines.append(
            f"{row.wealth:>14.6g}  {row.delta_g:>22.15e}  "
            f"{row.scaled_delta:>18.12g}  {row.residual:>18.12g}"
        )
    lines.append(f"expectation-limit delta: {_FORMAT_RATE.format(target)} $/month")
    lines.append(f"log-log residual slope:  {slope:.6f} (first-order truncation: -1)")
    sys.stdout.write("\n".join(lines) + "\n")
    if args.plot:
        from .plots import save_limit_plot

        save_limit_plot(rows, target, slope, args.plot)
    return 0


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "simulate": _cmd_simulate,
    "limit": _cmd_limit,
}


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValidationError) as exc:
        print(f"error[validation]: {exc}", file=sys.stderr)
        return 2
    except (BankruptcyError, DomainError) as exc:
        print(f"error[domain]: {exc}", file=sys.stderr)
        return 3
    except (NoRootInBracket, DegenerateFit) as exc:
        print(f"error[solver]: {exc}", file=sys.stderr)
        return 4
    except WinWinError as exc:  # pragma: no cover - safety net
        print(f"error[internal]: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
