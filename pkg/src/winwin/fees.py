"""Root finding on the fee axis: break-even fees and win-win intervals.

Every paradigm's contract delta is monotone in the fee (strictly decreasing
for the owner, strictly increasing for the insurer), so bisection on a sign
change is both sufficient and robust, including near the bankruptcy
singularity where the time-average delta diverges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import BankruptcyError, DomainError, NoRootInBracket, ValidationError
from .gambles import PartyState, Role, VentureSpec, net_premium
from .paradigms import (
    Paradigm,
    UtilityFunction,
    expected_utility_delta,
    expected_wealth_delta,
    time_growth_delta,
)

#: Safety margin keeping default brackets inside the finite-growth domain.
BRACKET_MARGIN = 0.01

#: Default relative tolerance on the bracket width at convergence.
REL_TOL = 1e-9

_MAX_BISECTION_ITERATIONS = 200


class IntervalKind(Enum):
    EMPTY = "empty"
    DEGENERATE = "degenerate"
    PROPER = "proper"


@dataclass(frozen=True)
class FeeInterval:
    """A fee range, possibly empty or collapsed to a single point.

    Win-win intervals are open: a Proper interval contains exactly the fees
    at which both parties' deltas are strictly positive.
    """

    paradigm: Paradigm
    kind: IntervalKind
    lower: float | None = None
    upper: float | None = None

    def __post_init__(self):
        if self.kind is IntervalKind.EMPTY:
            if self.lower is not None or self.upper is not None:
                raise ValidationError("kind", "an empty interval carries no bounds")
        elif self.lower is None or self.upper is None:
            raise ValidationError("kind", f"{self.kind.value} interval needs both bounds")
        elif self.kind is IntervalKind.PROPER and not self.lower < self.upper:
            raise ValidationError("kind", "proper interval needs lower < upper")
        elif self.kind is IntervalKind.DEGENERATE and self.lower != self.upper:
            raise ValidationError("kind", "degenerate interval needs lower == upper")

    def contains(self, fee: float) -> bool:
        """Strict interior membership; empty and degenerate intervals contain nothing."""
        if self.kind is IntervalKind.PROPER:
            return self.lower < fee < self.upper
        return False


def delta_of_fee(
    paradigm: Paradigm,
    role: Role,
    venture: VentureSpec,
    wealth: float,
    utility: UtilityFunction | None = None,
) -> Callable[[float], float]:
    """The party's contract delta as a function of the fee.

    The returned callable raises :class:`BankruptcyError` or
    :class:`DomainError` where the paradigm diverges.  Utility defaults to
    the square root when the expected-utility paradigm is selected.
    """
    party = PartyState(wealth=wealth, role=role)
    u = utility if utility is not None else UtilityFunction.sqrt()

    def delta(fee: float) -> float:
        contract = venture.contract(fee)
        if paradigm is Paradigm.EXPECTED_WEALTH:
            return expected_wealth_delta(venture, contract, party).delta.value
        if paradigm is Paradigm.EXPECTED_UTILITY:
            return expected_utility_delta(venture, contract, party, u).delta.value
        return time_growth_delta(venture, contract, party).delta.value

    return delta


def bisect(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    rel_tol: float = REL_TOL,
) -> float:
    """Bisection root of a monotone function on a sign-changing bracket.

    The bracket may be given in either order.  Converges when the bracket
    width falls below ``rel_tol`` relative to the endpoint magnitudes.

    Raises:
        NoRootInBracket: when the endpoint signs agree.
    """
    if lo > hi:
        lo, hi = hi, lo
    f_lo = fn(lo)
    f_hi = fn(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise NoRootInBracket(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
    for _ in range(_MAX_BISECTION_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * max(abs(lo), abs(hi)) or mid in (lo, hi):
            break
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if math.copysign(1.0, f_mid) == math.copysign(1.0, f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def default_bracket(venture: VentureSpec, wealth: float) -> tuple[float, float]:
    """Fee bracket staying inside the party's finite-growth domain.

    The upper end sits just below the smaller of the owner-domain ceiling
    (``wealth + gain``) and ``insured_loss + wealth``.
    """
    ceiling = min(wealth + venture.gain, venture.insured_loss + wealth)
    return 0.0, ceiling - BRACKET_MARGIN


def break_even_fee(
    paradigm: Paradigm,
    party: Role,
    venture: VentureSpec,
    wealth: float,
    bracket: tuple[float, float] | None = None,
    utility: UtilityFunction | None = None,
    rel_tol: float = REL_TOL,
) -> float:
    """The fee at which the party's contract delta crosses zero.

    Under expected wealth this is exactly the net premium for either party;
    under the time paradigm the owner's break-even lies above it and the
    insurer's approaches it from above as the insurer's wealth grows.

    Raises:
        NoRootInBracket: when the delta has the same sign at both bracket ends.
        BankruptcyError: when the bracket enters the divergent region.
    """
    if bracket is None:
        bracket = default_bracket(venture, wealth)
    delta = delta_of_fee(paradigm, party, venture, wealth, utility)
    return bisect(delta, bracket[0], bracket[1], rel_tol=rel_tol)


def _positive_region_edge_owner(
    delta: Callable[[float], float], ceiling: float
) -> float | None:
    """Upper edge of the owner's positive-delta fee region, or None if empty.

    An uninsured owner who risks bankruptcy has a divergent baseline, which
    makes any affordable contract infinitely attractive: the whole fee domain
    is positive then.
    """

    def guarded(fee: float) -> float:
        # Inside [0, ceiling] the insured branch cannot diverge, so a
        # BankruptcyError can only come from the uninsured baseline.
        try:
            return delta(fee)
        except BankruptcyError:
            return math.inf

    lo = 0.0
    if guarded(lo) <= 0.0:
        return None
    hi = ceiling
    if guarded(hi) >= 0.0:
        # Positive all the way to the domain margin.
        return hi
    return bisect(guarded, lo, hi)


def _positive_region_edge_insurer(
    delta: Callable[[float], float], floor: float, insured_loss: float
) -> float:
    """Lower edge of the insurer's positive-delta fee region.

    ``floor`` is the smallest fee at which the insurer survives a loss.
    The delta is strictly increasing and reaches a positive value no later
    than the insured loss itself, so an upward geometric expansion always
    brackets the crossing.
    """
    lo = floor
    if delta(lo) >= 0.0:
        return lo
    hi = max(insured_loss, lo + 1.0)
    while delta(hi) <= 0.0:
        hi = 2.0 * hi + 1.0
    return bisect(delta, lo, hi)


def win_win_interval(
    paradigm: Paradigm,
    venture: VentureSpec,
    owner: PartyState,
    insurer: PartyState,
    utility: UtilityFunction | None = None,
) -> FeeInterval:
    """The open range of fees at which both parties' deltas are strictly positive.

    Expected wealth: anti-symmetry forces the two zero crossings to coincide
    at the net premium, so the result is Degenerate there (both deltas are
    exactly zero), never Proper.  Time average and expected utility: Proper
    exactly when the insurer's break-even fee lies below the owner's.
    Degenerate and Empty results are values, not errors.
    """
    if paradigm is Paradigm.EXPECTED_WEALTH:
        fee = net_premium(venture.contract(0.0), venture.loss_probability)
        return FeeInterval(paradigm, IntervalKind.DEGENERATE, fee, fee)

    ceiling = default_bracket(venture, owner.wealth)[1]
    owner_delta = delta_of_fee(paradigm, Role.OWNER, venture, owner.wealth, utility)
    upper = _positive_region_edge_owner(owner_delta, ceiling)
    if upper is None:
        return FeeInterval(paradigm, IntervalKind.EMPTY)

    insured_loss = venture.insured_loss
    raw_floor = insured_loss - insurer.wealth
    # At the raw floor itself a loss wipes the insurer out; step just inside.
    floor = raw_floor + BRACKET_MARGIN if raw_floor >= 0.0 else 0.0
    if floor >= upper:
        return FeeInterval(paradigm, IntervalKind.EMPTY)
    insurer_delta = delta_of_fee(paradigm, Role.INSURER, venture, insurer.wealth, utility)
    lower = _positive_region_edge_insurer(insurer_delta, floor, insured_loss)

    if lower < upper:
        return FeeInterval(paradigm, IntervalKind.PROPER, lower, upper)
    if lower == upper:
        return FeeInterval(paradigm, IntervalKind.DEGENERATE, lower, upper)
    return FeeInterval(paradigm, IntervalKind.EMPTY)


@dataclass(frozen=True)
class SweepPoint:
    """Both parties' deltas at one fee; bankrupt deltas carry ``-inf``."""

    fee: float
    owner_delta: float
    insurer_delta: float
    owner_bankrupt: bool
    insurer_bankrupt: bool


def fee_sweep(
    paradigm: Paradigm,
    venture: VentureSpec,
    owner: PartyState,
    insurer: PartyState,
    fee_grid: list[float],
    utility: UtilityFunction | None = None,
) -> list[SweepPoint]:
    """Evaluate both parties' deltas on a fee grid.

    Divergent points do not raise: a bankrupt (or utility-domain-exiting)
    evaluation is emitted as ``-inf`` with the party's bankrupt flag set.
    """
    for fee in fee_grid:
        if fee < 0.0:
            raise ValidationError("fee_grid", "grid values must be non-negative")
    owner_delta = delta_of_fee(paradigm, Role.OWNER, venture, owner.wealth, utility)
    insurer_delta = delta_of_fee(paradigm, Role.INSURER, venture, insurer.wealth, utility)

    def evaluate(delta: Callable[[float], float], fee: float) -> tuple[float, bool]:
        try:
            return delta(fee), False
        except (BankruptcyError, DomainError):
            return -math.inf, True

    points = []
    for fee in fee_grid:
        o_val, o_bad = evaluate(owner_delta, fee)
        i_val, i_bad = evaluate(insurer_delta, fee)
        points.append(SweepPoint(fee, o_val, i_val, o_bad, i_bad))
    return points
