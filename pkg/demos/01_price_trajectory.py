"""
One trading session, two views of its price trajectory
=======================================================

Runs a single paper-scale session of the strongly exponential case and
plots the sales prices against the attempt step: once on log-log axes,
where the late-session divergence shows as a widening funnel, and once on
a linear axis together with the running mean, running variance, and the
staircase of the running maximum.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from powermarket import build_population, preset_population, run_session, trajectory_stats
from powermarket.stats import RunningStats

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# one seeded session of the inelastic (strongly exponential) case
pop = preset_population("EXP")
rng = np.random.default_rng(1234)
buyers, sellers = build_population(pop, rng)
result = run_session(buyers, sellers, rng)

steps = result.trade_steps
prices = result.trade_prices
print(f"{result.total_steps} attempted transactions, {result.n_trades} trades")
print(f"mean price {prices.mean():.2f}, max price {prices.max():.2f}")

# log-log view: the funnel
fig, ax = plt.subplots(figsize=(7, 5))
ax.loglog(steps, prices, ",", color="tab:blue", alpha=0.5)
ax.set_xlabel("step (attempted transactions)")
ax.set_ylabel("sales price")
ax.set_title("Sales price evolution (log-log)")
fig.tight_layout()
fig.savefig(OUT / "trajectory_loglog.png", dpi=150)

# linear view with running statistics
running_mean = np.empty(prices.size)
running_var = np.empty(prices.size)
running_max = np.empty(prices.size)
rs = RunningStats()
for i, (s, p) in enumerate(zip(steps, prices)):
    rs.push(float(p), step=int(s))
    running_mean[i] = rs.mean
    running_var[i] = rs.variance
    running_max[i] = rs.max

fig, ax = plt.subplots(figsize=(7, 5))
ax.plot(steps, prices, ",", color="0.7", label="price")
ax.plot(steps, running_max, color="tab:red", label="running max")
ax.plot(steps, running_mean, color="tab:blue", label="running mean")
ax.set_xlabel("step")
ax.set_ylabel("price")
ax2 = ax.twinx()
ax2.plot(steps, running_var, color="tab:green", lw=0.8, label="running variance")
ax2.set_ylabel("variance")
ax.legend(loc="upper left")
ax2.legend(loc="center left")
ax.set_title("Sales price evolution with running statistics")
fig.tight_layout()
fig.savefig(OUT / "trajectory_linear.png", dpi=150)

# where does the largest jump of the maximum land?
jump_step, jump = trajectory_stats(steps, prices).max_divergence_step()
print(f"largest jump of the running max: +{jump:.1f} at step {jump_step} "
      f"({jump_step / result.total_steps:.0%} of the session)")
print(f"figures written to {OUT}")
