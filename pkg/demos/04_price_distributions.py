"""
Pooled price distributions of the two cases
===========================================

Pools the sales prices of ten sessions per case and shows the two standard
distribution views: the empirical CDF on a semi-log price axis (an S shape
reminiscent of a log-normal, though nothing is fitted) and the unit-bin
density on log-log axes, where the high-price tails of the two cases fall
at a similar rate.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from powermarket import build_population, ecdf, preset_population, run_session, unit_bin_density
from powermarket.harness import session_seed, tail_log_slope

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

MASTER_SEED = 1234
pooled = {}
for case in ("EXP", "LIN"):
    chunks = []
    for i in range(10):
        rng = np.random.default_rng(session_seed(MASTER_SEED, i))
        buyers, sellers = build_population(preset_population(case), rng)
        chunks.append(run_session(buyers, sellers, rng).trade_prices)
    pooled[case] = np.concatenate(chunks)
    print(f"{case}: {pooled[case].size} pooled trades, "
          f"mean {pooled[case].mean():.2f}, max {pooled[case].max():.1f}, "
          f"tail slope {tail_log_slope(pooled[case]):.2f}")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 5))

# semi-log ECDF overlay
for case, color in (("EXP", "tab:blue"), ("LIN", "tab:orange")):
    e = ecdf(pooled[case])
    ax1.semilogx(e.values, np.arange(1, e.n + 1) / e.n, color=color, label=case)
ax1.set_xlabel("sales price")
ax1.set_ylabel("cumulative probability")
ax1.set_title("Empirical CDF (semi-log)")
ax1.legend()

# log-log unit-bin density
for case, color in (("EXP", "tab:blue"), ("LIN", "tab:orange")):
    d = unit_bin_density(pooled[case])
    bins = np.array([d.bin_lo(k) + 0.5 for k, _ in d.items()])
    mass = np.array([m for _, m in d.items()])
    ax2.loglog(bins, mass, ".", ms=3, color=color, label=case)
ax2.set_xlabel("sales price (unit bins)")
ax2.set_ylabel("probability mass")
ax2.set_title("Density (log-log)")
ax2.legend()

fig.tight_layout()
fig.savefig(OUT / "price_distributions.png", dpi=150)
print(f"figure written to {OUT}")
