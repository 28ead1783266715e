"""
Running maximum price across ten sessions
=========================================

Superimposes the running-maximum staircases of ten independent sessions of
the exponential case, marking the largest single jump of each (triangles).
The big jumps cluster in the final third of the step axis: late in the
session, buyers who banked cheap deals early can outbid everyone for the
last scarce units.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from powermarket import build_population, preset_population, run_session, trajectory_stats
from powermarket.harness import session_seed

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

MASTER_SEED = 1234
fig, ax = plt.subplots(figsize=(8, 5))

for i in range(10):
    rng = np.random.default_rng(session_seed(MASTER_SEED, i))
    buyers, sellers = build_population(preset_population("EXP"), rng)
    result = run_session(buyers, sellers, rng)
    rs = trajectory_stats(result.trade_steps, result.trade_prices)

    sx = [s for s, _ in rs.max_series]
    sy = [m for _, m in rs.max_series]
    ax.step(sx, sy, where="post", lw=0.9, alpha=0.8)

    jump_step, jump = rs.max_divergence_step()
    max_at_jump = next(m for s, m in rs.max_series if s == jump_step)
    ax.plot([jump_step], [max_at_jump], "rv", ms=8)
    frac = jump_step / result.total_steps
    print(f"session {i}: largest jump +{jump:7.1f} at step {jump_step:>7d} "
          f"({frac:.0%} of {result.total_steps} steps)")

ax.set_xlabel("step (attempted transactions)")
ax.set_ylabel("running maximum price")
ax.set_title("Maximum price evolution, ten sessions (triangles: largest jump)")
fig.tight_layout()
fig.savefig(OUT / "max_price_jumps.png", dpi=150)
print(f"figure written to {OUT}")
