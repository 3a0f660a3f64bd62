"""Domain model for ventures, contracts, parties, and the gambles they face.

A venture is a one-period risky undertaking (a cargo shipment, say): it pays
a gain on success and destroys a replaceable asset on failure.  An insurance
contract transfers that risk for a fee.  Each party then faces a *gamble*, a
finite discrete distribution of wealth changes over the period, which is the
common input to every decision paradigm in :mod:`winwin.paradigms`.

All types are immutable values; all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError

#: Absolute tolerance for the probability-normalization invariant.
PROBABILITY_TOL = 1e-12


class Role(Enum):
    """Which side of the contract a party stands on."""

    OWNER = "owner"
    INSURER = "insurer"


@dataclass(frozen=True)
class VentureSpec:
    """A one-period risky venture.

    Attributes:
        gain: Profit on success, in currency units.
        replacement_cost: Value destroyed on failure, in currency units.
        loss_probability: Probability of failure, in [0, 1].
        duration: Length of one venture period, in months.
    """

    gain: float
    replacement_cost: float
    loss_probability: float
    duration: float

    def __post_init__(self):
        if not 0.0 <= self.loss_probability <= 1.0:
            raise ValidationError("loss_probability", "must lie in [0, 1]")
        if not self.duration > 0.0:
            raise ValidationError("duration", "must be positive")
        if self.gain < 0.0:
            raise ValidationError("gain", "must be non-negative")
        if self.replacement_cost < 0.0:
            raise ValidationError("replacement_cost", "must be non-negative")

    @property
    def insured_loss(self) -> float:
        """Full coverage level for this venture: lost gain plus replacement cost."""
        return self.gain + self.replacement_cost

    def contract(self, fee: float) -> "ContractTerms":
        """Full-coverage contract for this venture at the given fee."""
        return ContractTerms(insured_loss=self.insured_loss, fee=fee)


@dataclass(frozen=True)
class ContractTerms:
    """An insurance contract: the covered loss and the fee charged for cover."""

    insured_loss: float
    fee: float

    def __post_init__(self):
        if self.insured_loss < 0.0:
            raise ValidationError("insured_loss", "must be non-negative")
        if self.fee < 0.0:
            raise ValidationError("fee", "must be non-negative")


@dataclass(frozen=True)
class PartyState:
    """A contracting party: current wealth and contract role."""

    wealth: float
    role: Role

    def __post_init__(self):
        if not self.wealth > 0.0:
            raise ValidationError("wealth", "must be positive")


@dataclass(frozen=True)
class Gamble:
    """A finite discrete distribution of wealth changes over one period.

    Outcomes are (delta_wealth, probability) pairs.  Probabilities must be
    non-negative and sum to one within :data:`PROBABILITY_TOL`; they are
    validated, never silently renormalized.  Zero-probability outcomes are
    retained so that edge cases stay explicit.
    """

    outcomes: tuple[tuple[float, float], ...]
    duration: float

    def __post_init__(self):
        object.__setattr__(
            self,
            "outcomes",
            tuple((float(d), float(q)) for d, q in self.outcomes),
        )
        if not self.outcomes:
            raise ValidationError("outcomes", "must be non-empty")
        if not self.duration > 0.0:
            raise ValidationError("duration", "must be positive")
        for _, probability in self.outcomes:
            if probability < 0.0:
                raise ValidationError("outcomes", "probabilities must be non-negative")
        total = math.fsum(q for _, q in self.outcomes)
        if abs(total - 1.0) > PROBABILITY_TOL:
            raise ValidationError(
                "outcomes", f"probabilities sum to {total!r}, not 1"
            )

    def expectation(self) -> float:
        """Probability-weighted mean wealth change over one period.

        Uses exact summation, so the result is invariant under permutation
        of the outcomes list.
        """
        return math.fsum(q * d for d, q in self.outcomes)


def owner_gamble(venture: VentureSpec, contract: ContractTerms | None = None) -> Gamble:
    """The owner's wealth-change distribution, with or without insurance.

    Uninsured, the owner gains ``gain`` with probability ``1 - p`` and loses
    ``replacement_cost`` with probability ``p``.  Insured, the owner receives
    ``gain - fee`` with certainty.
    """
    p = venture.loss_probability
    if contract is None:
        return Gamble(
            outcomes=((venture.gain, 1.0 - p), (-venture.replacement_cost, p)),
            duration=venture.duration,
        )
    return Gamble(
        outcomes=((venture.gain - contract.fee, 1.0),),
        duration=venture.duration,
    )


def insurer_gamble(
    contract: ContractTerms, loss_probability: float, duration: float
) -> Gamble:
    """The insurer's wealth-change distribution under the contract.

    The insurer keeps the fee with probability ``1 - p`` and nets
    ``fee - insured_loss`` with probability ``p``.
    """
    if not 0.0 <= loss_probability <= 1.0:
        raise ValidationError("loss_probability", "must lie in [0, 1]")
    p = loss_probability
    return Gamble(
        outcomes=(
            (contract.fee, 1.0 - p),
            (contract.fee - contract.insured_loss, p),
        ),
        duration=duration,
    )


def net_premium(contract: ContractTerms, loss_probability: float) -> float:
    """Expected claim cost ``p * L``: the minimum viable fee for a risk-neutral insurer."""
    if not 0.0 <= loss_probability <= 1.0:
        raise ValidationError("loss_probability", "must lie in [0, 1]")
    return loss_probability * contract.insured_loss
