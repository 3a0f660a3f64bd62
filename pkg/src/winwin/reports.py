"""Report construction: paradigm tables and fee-sweep CSV emission.

Machine output is always raw per-month rates; only the human renderer
formats growth rates as percentages (4 significant digits).  Sweep CSV is
byte-deterministic: fixed column order, ``\\n`` line endings, and full
precision scientific notation.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import BankruptcyError, DomainError, ValidationError
from .fees import SweepPoint, fee_sweep
from .paradigms import (
    EvaluationReport,
    Paradigm,
    RateUnit,
    expected_utility_delta,
    expected_wealth_delta,
    time_growth_delta,
)
from .scenario import Scenario, scenario_to_json

#: Exact sweep CSV header, fixed by the file-format contract.
SWEEP_HEADER = "fee,owner_delta,insurer_delta,owner_bankrupt,insurer_bankrupt"

_UNITS = {
    Paradigm.EXPECTED_WEALTH: RateUnit.MONEY_PER_TIME,
    Paradigm.EXPECTED_UTILITY: RateUnit.UTIL_PER_TIME,
    Paradigm.TIME_AVERAGE: RateUnit.GROWTH_PER_TIME,
}


@dataclass(frozen=True)
class TableCell:
    """One rate cell; ``value`` is None when the paradigm diverged there."""

    value: float | None
    bankrupt: bool = False


@dataclass(frozen=True)
class ParadigmTable:
    """Insured/uninsured/difference rates for both parties under one paradigm."""

    paradigm: Paradigm
    unit: RateUnit
    owner_insured: TableCell
    owner_uninsured: TableCell
    owner_delta: TableCell
    insurer_insured: TableCell
    insurer_uninsured: TableCell
    insurer_delta: TableCell

    def cells(self) -> dict[str, TableCell]:
        return {
            "owner_insured": self.owner_insured,
            "owner_uninsured": self.owner_uninsured,
            "owner_delta": self.owner_delta,
            "insurer_insured": self.insurer_insured,
            "insurer_uninsured": self.insurer_uninsured,
            "insurer_delta": self.insurer_delta,
        }

    def to_dict(self) -> dict:
        return {
            "paradigm": self.paradigm.value,
            "unit": self.unit.value,
            "cells": {
                name: {"value": cell.value, "bankrupt": cell.bankrupt}
                for name, cell in self.cells().items()
            },
        }


def _party_cells(report_or_error: EvaluationReport | Exception) -> tuple[TableCell, TableCell, TableCell]:
    if isinstance(report_or_error, Exception):
        flagged = TableCell(value=None, bankrupt=True)
        return flagged, flagged, flagged
    report = report_or_error
    return (
        TableCell(report.rate_insured.value),
        TableCell(report.rate_uninsured.value),
        TableCell(report.delta.value),
    )


def _evaluate(scenario: Scenario, paradigm: Paradigm, party) -> EvaluationReport | Exception:
    venture, contract = scenario.venture, scenario.contract
    try:
        if paradigm is Paradigm.EXPECTED_WEALTH:
            return expected_wealth_delta(venture, contract, party)
        if paradigm is Paradigm.EXPECTED_UTILITY:
            return expected_utility_delta(venture, contract, party, scenario.utility)
        return time_growth_delta(venture, contract, party)
    except (BankruptcyError, DomainError) as exc:
        return exc


def emit_tables(
    scenario: Scenario, paradigms: tuple[Paradigm, ...] = tuple(Paradigm)
) -> list[ParadigmTable]:
    """All rate cells for the requested paradigms.

    Divergent cells never abort the report; they come back flagged.
    """
    tables = []
    for paradigm in paradigms:
        o_in, o_un, o_delta = _party_cells(_evaluate(scenario, paradigm, scenario.owner))
        i_in, i_un, i_delta = _party_cells(_evaluate(scenario, paradigm, scenario.insurer))
        tables.append(
            ParadigmTable(
                paradigm=paradigm,
                unit=_UNITS[paradigm],
                owner_insured=o_in,
                owner_uninsured=o_un,
                owner_delta=o_delta,
                insurer_insured=i_in,
                insurer_uninsured=i_un,
                insurer_delta=i_delta,
            )
        )
    return tables


def scenario_digest(scenario: Scenario) -> str:
    """SHA-256 of the canonical scenario JSON."""
    return hashlib.sha256(scenario_to_json(scenario).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class SweepOutput:
    """A fee sweep plus the provenance needed to interpret it."""

    paradigm: Paradigm
    unit: RateUnit
    scenario_sha256: str
    points: list[SweepPoint]

    def to_csv(self) -> str:
        """Byte-deterministic CSV: provenance comments, exact header, then rows."""
        lines = [
            f"# paradigm={self.paradigm.value}",
            f"# unit={self.unit.value}",
            f"# scenario_sha256={self.scenario_sha256}",
            SWEEP_HEADER,
        ]
        for point in self.points:
            lines.append(
                ",".join(
                    (
                        format(point.fee, ".17e"),
                        format(point.owner_delta, ".17e"),
                        format(point.insurer_delta, ".17e"),
                        "1" if point.owner_bankrupt else "0",
                        "1" if point.insurer_bankrupt else "0",
                    )
                )
            )
        return "\n".join(lines) + "\n"


def emit_sweep(
    scenario: Scenario,
    paradigm: Paradigm,
    fee_min: float,
    fee_max: float,
    steps: int,
) -> SweepOutput:
    """Evaluate both parties' deltas on an evenly spaced fee grid.

    Raises:
        ValidationError: unless ``fee_min < fee_max`` and ``steps >= 2``.
    """
    if steps < 2:
        raise ValidationError("steps", "must be at least 2")
    if not fee_min < fee_max:
        raise ValidationError("fee_min", "must be strictly below fee_max")
    grid = [float(fee) for fee in np.linspace(fee_min, fee_max, steps)]
    points = fee_sweep(
        paradigm,
        scenario.venture,
        scenario.owner,
        scenario.insurer,
        grid,
        utility=scenario.utility,
    )
    return SweepOutput(
        paradigm=paradigm,
        unit=_UNITS[paradigm],
        scenario_sha256=scenario_digest(scenario),
        points=points,
    )


def format_rate(value: float | None, unit: RateUnit, bankrupt: bool = False) -> str:
    """Human rendering of one rate: growth as percent, 4 significant digits."""
    if bankrupt or value is None:
        return "-inf (bankrupt)"
    if math.isinf(value):
        return "-inf (bankrupt)" if value < 0 else "+inf"
    if unit is RateUnit.GROWTH_PER_TIME:
        return f"{value * 100.0:.4g} %/month"
    if unit is RateUnit.MONEY_PER_TIME:
        return f"{value:.4g} $/month"
    return f"{value:.4g} utils/month"


_TABLE_TITLES = {
    Paradigm.EXPECTED_WEALTH: "Expected-wealth rate of change",
    Paradigm.EXPECTED_UTILITY: "Expected-utility rate of change",
    Paradigm.TIME_AVERAGE: "Time-average growth rate",
}


def render_tables(tables: list[ParadigmTable]) -> str:
    """Plain-text tables mirroring the insured/uninsured/difference layout."""
    blocks = []
    for table in tables:
        fmt = lambda cell: format_rate(cell.value, table.unit, cell.bankrupt)  # noqa: E731
        rows = [
            (_TABLE_TITLES[table.paradigm], "Owner", "Insurer"),
            ("insured", fmt(table.owner_insured), fmt(table.insurer_insured)),
            ("uninsured", fmt(table.owner_uninsured), fmt(table.insurer_uninsured)),
            ("difference", fmt(table.owner_delta), fmt(table.insurer_delta)),
        ]
        widths = [max(len(row[i]) for row in rows) for i in range(3)]
        lines = []
        for index, row in enumerate(rows):
            lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
            if index == 0:
                lines.append("-" * (sum(widths) + 4))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
