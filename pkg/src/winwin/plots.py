"""Figure rendering for sweep and limit-series reports.

File output only: the Agg backend is selected at import so the CLI can run
on headless machines.  Plot conventions follow the report data: green for
the owner, blue for the insurer, a grey zero line, a dashed marker at the
proposed fee, and shading over the win-win fee range when one exists.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .asymptotics import LimitSeriesRow  # noqa: E402
from .paradigms import RateUnit  # noqa: E402
from .reports import SweepOutput  # noqa: E402

_UNIT_LABELS = {
    RateUnit.MONEY_PER_TIME: "delta rate ($/month)",
    RateUnit.UTIL_PER_TIME: "delta rate (utils/month)",
    RateUnit.GROWTH_PER_TIME: "delta growth rate (1/month)",
}


def save_sweep_plot(
    sweep: SweepOutput, path: str, proposed_fee: float | None = None
) -> None:
    """Render both parties' delta-versus-fee curves to an image file."""
    fees = [p.fee for p in sweep.points]
    owner = [p.owner_delta if not p.owner_bankrupt else math.nan for p in sweep.points]
    insurer = [p.insurer_delta if not p.insurer_bankrupt else math.nan for p in sweep.points]

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.axhline(0.0, color="0.6", linewidth=0.8)
    ax.plot(fees, owner, color="tab:green", label="owner")
    ax.plot(fees, insurer, color="tab:blue", label="insurer")
    if proposed_fee is not None:
        ax.axvline(proposed_fee, color="0.3", linestyle="--", linewidth=0.8, label="proposed fee")

    both_positive = [
        p.fee
        for p in sweep.points
        if not (p.owner_bankrupt or p.insurer_bankrupt)
        and p.owner_delta > 0.0
        and p.insurer_delta > 0.0
    ]
    if both_positive:
        ax.axvspan(min(both_positive), max(both_positive), color="tab:olive", alpha=0.15)

    ax.set_xlabel("insurance fee ($)")
    ax.set_ylabel(_UNIT_LABELS[sweep.unit])
    ax.set_title(f"Contract delta vs fee ({sweep.paradigm.value})")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_limit_plot(
    rows: list[LimitSeriesRow],
    expectation_delta: float,
    slope: float,
    path: str,
) -> None:
    """Render the wealth-scaled growth delta converging to the expectation limit."""
    wealth = [row.wealth for row in rows]
    scaled = [row.scaled_delta for row in rows]
    residual = [abs(row.residual) for row in rows]

    fig, (left, right) = plt.subplots(1, 2, figsize=(9.0, 4.0))
    left.semilogx(wealth, scaled, marker="o", color="tab:blue", label="wealth x delta growth")
    left.axhline(expectation_delta, color="0.4", linestyle="--", label="expected-wealth delta")
    left.set_xlabel("insurer wealth ($)")
    left.set_ylabel("scaled delta ($/month)")
    left.legend(frameon=False)

    right.loglog(wealth, residual, marker="o", color="tab:red")
    right.set_xlabel("insurer wealth ($)")
    right.set_ylabel("|residual| ($/month)")
    right.set_title(f"fitted slope {slope:.3f}")

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
