"""The infinite-wealth correspondence between the time and expectation criteria.

As the insurer's wealth grows, the contract's time-average growth delta
scaled by wealth converges to the expected-wealth delta ``(F - pL) / dt``:
the residual after the first-order term falls off as ``1 / W``, with
coefficient ``-[(1-p) F^2 + p (F-L)^2] / 2`` per unit time.  A risk-neutral
stance is therefore the large-wealth limit of growth-rate optimization, and
outside that regime it walks a finite-wealth insurer into contracts that
bankrupt it on the first loss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BankruptcyError, DegenerateFit
from .gambles import ContractTerms, VentureSpec


@dataclass(frozen=True)
class LimitSeriesRow:
    """One wealth level of the correspondence series.

    ``scaled_delta`` is ``delta_g * wealth`` (money per time) and
    ``residual`` its distance from the expected-wealth delta.
    """

    wealth: float
    delta_g: float
    scaled_delta: float
    residual: float


def limit_series(
    venture: VentureSpec,
    contract: ContractTerms,
    wealth_grid: list[float],
) -> list[LimitSeriesRow]:
    """Insurer growth deltas across a wealth grid, scaled toward the expectation limit.

    Uses a log1p formulation throughout: at wealths like 10^9 the naive
    ``ln(1 + F/W)`` loses the signal to rounding.

    Raises:
        BankruptcyError: for grid points where a loss would wipe the insurer out.
    """
    p = venture.loss_probability
    fee = contract.fee
    shortfall = fee - contract.insured_loss
    dt = venture.duration
    expectation_delta = (fee - p * contract.insured_loss) / dt

    rows = []
    for wealth in wealth_grid:
        if not wealth + shortfall > 0.0:
            raise BankruptcyError(
                f"wealth {wealth!r} cannot absorb the insured loss; growth diverges"
            )
        delta_g = ((1.0 - p) * math.log1p(fee / wealth) + p * math.log1p(shortfall / wealth)) / dt
        scaled = delta_g * wealth
        rows.append(
            LimitSeriesRow(
                wealth=wealth,
                delta_g=delta_g,
                scaled_delta=scaled,
                residual=scaled - expectation_delta,
            )
        )
    return rows


def second_order_coefficient(venture: VentureSpec, contract: ContractTerms) -> float:
    """Coefficient ``c`` such that ``residual ~ c / W``: the next Taylor term.

    Equals ``-[(1-p) F^2 + p (F-L)^2] / (2 dt)``.
    """
    p = venture.loss_probability
    fee = contract.fee
    shortfall = fee - contract.insured_loss
    return -((1.0 - p) * fee**2 + p * shortfall**2) / (2.0 * venture.duration)


def residual_order_check(rows: list[LimitSeriesRow]) -> float:
    """Least-squares slope of ``log |residual|`` against ``log wealth``.

    A slope of -1 confirms the first-order Taylor truncation: what remains
    after the expectation-limit term decays as ``1 / W``.

    Raises:
        DegenerateFit: with fewer than three rows, coincident wealths, or
            residuals that underflowed to zero.
    """
    if len(rows) < 3:
        raise DegenerateFit(f"need at least 3 rows, got {len(rows)}")
    if any(row.residual == 0.0 for row in rows):
        raise DegenerateFit("a residual underflowed to zero")
    x = np.log([row.wealth for row in rows])
    y = np.log([abs(row.residual) for row in rows])
    x_centered = x - x.mean()
    denominator = float(np.dot(x_centered, x_centered))
    if denominator == 0.0:
        raise DegenerateFit("wealth grid has no spread")
    return float(np.dot(x_centered, y - y.mean()) / denominator)


@dataclass(frozen=True)
class TrapReport:
    """Outcome of the risk-neutral-insurer check for one contract.

    The trap: a contract with ``F > pL`` looks profitable in expectation,
    yet with ``L >= W + F`` the first loss bankrupts the insurer, so its
    time-average growth rate is minus infinity.

    Attributes:
        applies: Both conditions hold; a purely expectation-driven insurer
            would sign a contract that ruins it.
        attractive_in_expectation: ``F > pL``.
        bankrupt_on_loss: A single loss exhausts wealth plus fee.
        expectation_delta: ``(F - pL) / dt`` in money per time.
    """

    applies: bool
    attractive_in_expectation: bool
    bankrupt_on_loss: bool
    expectation_delta: float


def rothschild_stiglitz_trap(
    venture: VentureSpec, contract: ContractTerms, insurer_wealth: float
) -> TrapReport:
    """Check whether expectation-value reasoning would ruin this insurer."""
    p = venture.loss_probability
    expectation_delta = (contract.fee - p * contract.insured_loss) / venture.duration
    attractive = expectation_delta > 0.0
    bankrupt = insurer_wealth + contract.fee - contract.insured_loss <= 0.0
    return TrapReport(
        applies=attractive and bankrupt,
        attractive_in_expectation=attractive,
        bankrupt_on_loss=bankrupt,
        expectation_delta=expectation_delta,
    )
