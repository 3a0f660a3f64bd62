"""Decision engine for one-shot insurance contracts.

Evaluates a contract under three criteria — expected wealth, expected
utility, and time-average growth under multiplicative dynamics — solves for
break-even fees and win-win fee ranges, and verifies the ergodic and
infinite-wealth-limit claims behind the time criterion by simulation and
series evaluation.
"""

__version__ = "0.1.0"

from .asymptotics import (
    LimitSeriesRow,
    TrapReport,
    limit_series,
    residual_order_check,
    rothschild_stiglitz_trap,
    second_order_coefficient,
)
from .errors import (
    BankruptcyError,
    DegenerateFit,
    DomainError,
    NoRootInBracket,
    ParseError,
    ValidationError,
    WinWinError,
)
from .fees import (
    FeeInterval,
    IntervalKind,
    SweepPoint,
    break_even_fee,
    delta_of_fee,
    fee_sweep,
    win_win_interval,
)
from .gambles import (
    ContractTerms,
    Gamble,
    PartyState,
    Role,
    VentureSpec,
    insurer_gamble,
    net_premium,
    owner_gamble,
)
from .montecarlo import (
    SimulationConfig,
    Trajectory,
    estimate_growth,
    multiplicative_factors,
    ruin_probability,
    simulate,
)
from .paradigms import (
    EvaluationReport,
    Paradigm,
    RateUnit,
    RateValue,
    UtilityFunction,
    expected_utility_delta,
    expected_utility_rate,
    expected_wealth_delta,
    expected_wealth_rate,
    time_growth_delta,
    time_growth_rate,
    utility_difference,
)
from .reports import ParadigmTable, SweepOutput, TableCell, emit_sweep, emit_tables
from .scenario import Scenario, load_scenario, scenario_to_json

__all__ = [
    "__version__",
    "BankruptcyError",
    "ContractTerms",
    "DegenerateFit",
    "DomainError",
    "EvaluationReport",
    "FeeInterval",
    "Gamble",
    "IntervalKind",
    "LimitSeriesRow",
    "NoRootInBracket",
    "ParadigmTable",
    "Paradigm",
    "ParseError",
    "PartyState",
    "RateUnit",
    "RateValue",
    "Role",
    "Scenario",
    "SimulationConfig",
    "SweepOutput",
    "SweepPoint",
    "TableCell",
    "Trajectory",
    "TrapReport",
    "UtilityFunction",
    "ValidationError",
    "VentureSpec",
    "WinWinError",
    "break_even_fee",
    "delta_of_fee",
    "emit_sweep",
    "emit_tables",
    "estimate_growth",
    "expected_utility_delta",
    "expected_utility_rate",
    "expected_wealth_delta",
    "expected_wealth_rate",
    "fee_sweep",
    "insurer_gamble",
    "limit_series",
    "load_scenario",
    "multiplicative_factors",
    "net_premium",
    "owner_gamble",
    "residual_order_check",
    "rothschild_stiglitz_trap",
    "ruin_probability",
    "scenario_to_json",
    "second_order_coefficient",
    "simulate",
    "time_growth_delta",
    "time_growth_rate",
    "utility_difference",
    "win_win_interval",
]
