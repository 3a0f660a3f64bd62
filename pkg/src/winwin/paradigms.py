"""The three decision criteria, as pure evaluators over gambles.

Every criterion is a rate: wealth change per time (expected-wealth), utility
change per time (expected-utility), or exponential growth per time under
multiplicative repetition (time-average).  All three consume the same
:class:`~winwin.gambles.Gamble` type, so cross-paradigm identities can be
tested on identical inputs.

Units are tracked explicitly.  Rates of different units can never be compared
or subtracted; mixing them is a construction error, not a silent coercion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BankruptcyError, DomainError, ValidationError
from .gambles import (
    ContractTerms,
    Gamble,
    PartyState,
    Role,
    VentureSpec,
    insurer_gamble,
    owner_gamble,
)


class Paradigm(Enum):
    """Decision criterion used to judge a contract."""

    EXPECTED_WEALTH = "ew"
    EXPECTED_UTILITY = "eu"
    TIME_AVERAGE = "ta"


class RateUnit(Enum):
    """Dimension of a per-time rate."""

    MONEY_PER_TIME = "money/month"
    UTIL_PER_TIME = "util/month"
    GROWTH_PER_TIME = "1/month"


@dataclass(frozen=True)
class RateValue:
    """A per-month rate tagged with its unit."""

    value: float
    unit: RateUnit

    def __sub__(self, other: "RateValue") -> "RateValue":
        if not isinstance(other, RateValue):
            return NotImplemented
        if self.unit is not other.unit:
            raise ValidationError(
                "unit", f"cannot subtract {other.unit.value} from {self.unit.value}"
            )
        return RateValue(self.value - other.value, self.unit)


@dataclass(frozen=True)
class UtilityFunction:
    """A power-monomial or logarithmic utility, consumed only through differences.

    The power family is ``U(W) = W ** exponent`` with exponent in (0, 1];
    exponent 1 reproduces linear utility and 0.5 is the classic square root.
    The logarithmic family never evaluates a standalone ``ln(W)``: differences
    are computed as ``ln(W2 / W1)``, where the units cancel and the logarithm
    acts on a dimensionless ratio.

    ``exponent is None`` marks the logarithmic family.
    """

    exponent: float | None = None

    def __post_init__(self):
        if self.exponent is not None and not 0.0 < self.exponent <= 1.0:
            raise ValidationError("exponent", "power-monomial exponent must lie in (0, 1]")

    @classmethod
    def power(cls, exponent: float) -> "UtilityFunction":
        return cls(exponent=exponent)

    @classmethod
    def sqrt(cls) -> "UtilityFunction":
        return cls(exponent=0.5)

    @classmethod
    def log(cls) -> "UtilityFunction":
        return cls(exponent=None)

    @property
    def is_log(self) -> bool:
        return self.exponent is None

    def label(self) -> str:
        return "log" if self.is_log else f"W^{self.exponent:g}"


def _log_ratio(w_from: float, w_to: float) -> float:
    # ln(w_to / w_from), stable when the change is small relative to wealth.
    # Shared by the logarithmic utility and the time paradigm so that the
    # identity between the two holds bit for bit.
    return math.log1p((w_to - w_from) / w_from)


def utility_difference(u: UtilityFunction, w_from: float, w_to: float) -> float:
    """``U(w_to) - U(w_from)`` in utils.

    Raises:
        DomainError: when an argument lies outside the utility domain
            (negative wealth for the power family, non-positive wealth for
            the logarithmic family).
    """
    if u.is_log:
        if w_from <= 0.0 or w_to <= 0.0:
            raise DomainError(
                f"logarithmic utility needs positive wealth, got {w_from!r} -> {w_to!r}"
            )
        return _log_ratio(w_from, w_to)
    if w_from < 0.0 or w_to < 0.0:
        raise DomainError(
            f"power-monomial utility needs non-negative wealth, got {w_from!r} -> {w_to!r}"
        )
    return w_to**u.exponent - w_from**u.exponent


@dataclass(frozen=True)
class EvaluationReport:
    """Per-paradigm rates with and without insurance, and their difference.

    The delta is always computed as ``rate_insured - rate_uninsured`` through
    the same arithmetic path, which the constructor enforces.
    """

    paradigm: Paradigm
    party: Role
    rate_insured: RateValue
    rate_uninsured: RateValue
    delta: RateValue

    def __post_init__(self):
        if not (
            self.rate_insured.unit is self.rate_uninsured.unit is self.delta.unit
        ):
            raise ValidationError("delta", "all three rates must share one unit")
        if self.delta.value != self.rate_insured.value - self.rate_uninsured.value:
            raise ValidationError(
                "delta", "must equal rate_insured - rate_uninsured exactly"
            )


def expected_wealth_rate(g: Gamble) -> RateValue:
    """Rate of change of the expectation value of wealth: ``<dW> / dt``."""
    return RateValue(g.expectation() / g.duration, RateUnit.MONEY_PER_TIME)


def expected_utility_rate(g: Gamble, wealth: float, u: UtilityFunction) -> RateValue:
    """Rate of change of the expectation value of utility: ``<dU> / dt``.

    Every outcome, including zero-probability ones, must keep
    ``wealth + delta`` inside the utility domain.

    Raises:
        DomainError: when any outcome exits the domain.
    """
    if not wealth > 0.0:
        raise ValidationError("wealth", "must be positive")
    total = math.fsum(
        q * utility_difference(u, wealth, wealth + d) for d, q in g.outcomes
    )
    return RateValue(total / g.duration, RateUnit.UTIL_PER_TIME)


def time_growth_rate(g: Gamble, wealth: float) -> RateValue:
    """Time-average exponential growth rate under multiplicative repetition.

    This is ``<d ln W> / dt``: the expectation value of the per-period log
    growth, which is the ergodic observable whose long-run time average it
    equals with probability one.  Outcomes with zero probability are ignored.

    Raises:
        BankruptcyError: when an outcome with positive probability leaves
            ``wealth + delta <= 0``; the growth rate then diverges to
            negative infinity.
    """
    if not wealth > 0.0:
        raise ValidationError("wealth", "must be positive")
    terms = []
    for d, q in g.outcomes:
        if q == 0.0:
            continue
        after = wealth + d
        if after <= 0.0:
            raise BankruptcyError(
                f"outcome {d!r} with probability {q!r} drives wealth "
                f"{wealth!r} to {after!r}; growth rate is -infinity"
            )
        terms.append(q * _log_ratio(wealth, after))
    return RateValue(math.fsum(terms) / g.duration, RateUnit.GROWTH_PER_TIME)


def _idle_baseline(unit: RateUnit) -> RateValue:
    # The insurer writes no other business: its uninsured rate is zero.
    return RateValue(0.0, unit)


def _party_gambles(
    venture: VentureSpec, contract: ContractTerms, party: PartyState
) -> tuple[Gamble | None, Gamble]:
    """(uninsured, insured) gambles for the party; None marks the idle baseline."""
    if party.role is Role.OWNER:
        return owner_gamble(venture), owner_gamble(venture, contract)
    return None, insurer_gamble(contract, venture.loss_probability, venture.duration)


def expected_wealth_delta(
    venture: VentureSpec, contract: ContractTerms, party: PartyState
) -> EvaluationReport:
    """Change in the expected-wealth rate from signing the contract.

    Wealth-independent: the report is the same for any party wealth.  The
    closed forms are ``(pL - F) / dt`` for the owner and its exact negative
    for the insurer.
    """
    uninsured, insured = _party_gambles(venture, contract, party)
    rate_un = (
        _idle_baseline(RateUnit.MONEY_PER_TIME)
        if uninsured is None
        else expected_wealth_rate(uninsured)
    )
    rate_in = expected_wealth_rate(insured)
    return EvaluationReport(
        Paradigm.EXPECTED_WEALTH, party.role, rate_in, rate_un, rate_in - rate_un
    )


def expected_utility_delta(
    venture: VentureSpec,
    contract: ContractTerms,
    party: PartyState,
    u: UtilityFunction,
) -> EvaluationReport:
    """Change in the expected-utility rate from signing the contract."""
    uninsured, insured = _party_gambles(venture, contract, party)
    rate_un = (
        _idle_baseline(RateUnit.UTIL_PER_TIME)
        if uninsured is None
        else expected_utility_rate(uninsured, party.wealth, u)
    )
    rate_in = expected_utility_rate(insured, party.wealth, u)
    return EvaluationReport(
        Paradigm.EXPECTED_UTILITY, party.role, rate_in, rate_un, rate_in - rate_un
    )


def time_growth_delta(
    venture: VentureSpec, contract: ContractTerms, party: PartyState
) -> EvaluationReport:
    """Change in the time-average growth rate from signing the contract.

    Raises:
        BankruptcyError: propagated from :func:`time_growth_rate` when either
            side of the comparison diverges.
    """
    uninsured, insured = _party_gambles(venture, contract, party)
    rate_un = (
        _idle_baseline(RateUnit.GROWTH_PER_TIME)
        if uninsured is None
        else time_growth_rate(uninsured, party.wealth)
    )
    rate_in = time_growth_rate(insured, party.wealth)
    return EvaluationReport(
        Paradigm.TIME_AVERAGE, party.role, rate_in, rate_un, rate_in - rate_un
    )
