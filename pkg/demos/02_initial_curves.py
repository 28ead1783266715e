"""
Initial supply-demand staircases and their crossing
===================================================

Builds one population for each case and plots the aggregate step curves of
the agents' initial conditions: demand sorted by unit value descending,
supply by unit cost ascending.  The crossing sits near 30 for both cases,
but the exponential case is almost vertical there (inelastic) while the
linear case crosses at a shallow angle.  The trading dynamics are driven by
budgets, not by these curves, so the crossing is a diagnostic only.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from powermarket import (
    build_population,
    demand_curve,
    intersection,
    preset_population,
    supply_curve,
    write_curves_csv,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

fig, axes = plt.subplots(1, 2, figsize=(11, 5), sharey=True)
for ax, case in zip(axes, ("EXP", "LIN")):
    buyers, sellers = build_population(preset_population(case), 1234)
    d = demand_curve(buyers)
    s = supply_curve(sellers)
    price, qty = intersection(d, s)
    print(f"{case}: crossing at price {price:.2f}, quantity {qty}")

    ax.step(d.cumulative, d.prices, where="post", label="demand", color="tab:blue")
    ax.step(s.cumulative, s.prices, where="post", label="supply", color="tab:orange")
    ax.plot([qty], [price], "k*", ms=12, label=f"crossing ({price:.1f}, {qty})")
    ax.set_xlabel("cumulative quantity")
    ax.set_title(f"case {case}")
    ax.set_ylim(0, 80)
    ax.legend()
    write_curves_csv(OUT / f"curves_{case.lower()}.csv", d, s)

axes[0].set_ylabel("unit price")
fig.suptitle("Supply-demand curves of the initial conditions")
fig.tight_layout()
fig.savefig(OUT / "initial_curves.png", dpi=150)
print(f"figure and CSVs written to {OUT}")
