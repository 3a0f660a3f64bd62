"""Scenario files: a flat JSON document describing one contract situation.

Schema (all fields required unless noted):

.. code-block:: json

    {
      "owner_wealth": 100000,
      "insurer_wealth": 1000000,
      "gain": 4000,
      "replacement_cost": 30000,
      "loss_probability": 0.05,
      "fee": 1800,
      "duration_months": 1,
      "utility_exponent": 0.5
    }

``utility_exponent`` is optional: a number in (0, 1] or the string "log";
it defaults to 0.5.  Structural problems (bad JSON, missing or mistyped
fields) raise :class:`ParseError`; range violations raise
:class:`ValidationError`.  Both name the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, ValidationError
from .gambles import ContractTerms, PartyState, Role, VentureSpec
from .paradigms import UtilityFunction

_NUMERIC_FIELDS = (
    "owner_wealth",
    "insurer_wealth",
    "gain",
    "replacement_cost",
    "loss_probability",
    "fee",
    "duration_months",
)

_ALL_FIELDS = _NUMERIC_FIELDS + ("utility_exponent",)


@dataclass(frozen=True)
class Scenario:
    """A fully validated contract situation: both parties, venture, and fee."""

    owner_wealth: float
    insurer_wealth: float
    gain: float
    replacement_cost: float
    loss_probability: float
    fee: float
    duration_months: float
    utility_exponent: float | str = 0.5

    def __post_init__(self):
        if not self.owner_wealth > 0.0:
            raise ValidationError("owner_wealth", "must be positive")
        if not self.insurer_wealth > 0.0:
            raise ValidationError("insurer_wealth", "must be positive")
        if self.gain < 0.0:
            raise ValidationError("gain", "must be non-negative")
        if self.replacement_cost < 0.0:
            raise ValidationError("replacement_cost", "must be non-negative")
        if not 0.0 <= self.loss_probability <= 1.0:
            raise ValidationError("loss_probability", "must lie in [0, 1]")
        if self.fee < 0.0:
            raise ValidationError("fee", "must be non-negative")
        if not self.duration_months > 0.0:
            raise ValidationError("duration_months", "must be positive")
        self.utility

    @property
    def venture(self) -> VentureSpec:
        return VentureSpec(
            gain=self.gain,
            replacement_cost=self.replacement_cost,
            loss_probability=self.loss_probability,
            duration=self.duration_months,
        )

    @property
    def contract(self) -> ContractTerms:
        return self.venture.contract(self.fee)

    @property
    def owner(self) -> PartyState:
        return PartyState(wealth=self.owner_wealth, role=Role.OWNER)

    @property
    def insurer(self) -> PartyState:
        return PartyState(wealth=self.insurer_wealth, role=Role.INSURER)

    @property
    def utility(self) -> UtilityFunction:
        if self.utility_exponent == "log":
            return UtilityFunction.log()
        if isinstance(self.utility_exponent, (int, float)) and not isinstance(
            self.utility_exponent, bool
        ):
            if not 0.0 < self.utility_exponent <= 1.0:
                raise ValidationError(
                    "utility_exponent", "must lie in (0, 1] or be \"log\""
                )
            return UtilityFunction.power(float(self.utility_exponent))
        raise ValidationError("utility_exponent", "must lie in (0, 1] or be \"log\"")


def _as_number(field: str, value: object) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(field, f"expected a number, got {value!r}")
    return float(value)


def load_scenario(source: str | Path) -> Scenario:
    """Load and validate a scenario from a file path or a JSON string.

    A ``Path`` (or a string that does not start with "{") is read as a file;
    anything else is parsed directly as JSON text.
    """
    if isinstance(source, Path) or not source.lstrip().startswith("{"):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError("<file>", str(exc)) from exc
    else:
        text = source

    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("<json>", f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ParseError("<json>", "top level must be a JSON object")

    for key in document:
        if key not in _ALL_FIELDS:
            raise ParseError(key, "unknown field")

    values: dict[str, object] = {}
    for field in _NUMERIC_FIELDS:
        if field not in document:
            raise ParseError(field, "required field is missing")
        values[field] = _as_number(field, document[field])

    if "utility_exponent" in document:
        exponent = document["utility_exponent"]
        if exponent == "log":
            values["utility_exponent"] = "log"
        else:
            values["utility_exponent"] = _as_number("utility_exponent", exponent)

    return Scenario(**values)


def scenario_to_json(scenario: Scenario) -> str:
    """Canonical JSON for a scenario: sorted keys, round-trip exact floats."""
    document = {field: getattr(scenario, field) for field in _ALL_FIELDS}
    return json.dumps(document, sort_keys=True, indent=2) + "\n"
