"""
End-to-end experiment batches with the harness
==============================================

Runs the two standard ten-session experiments through the harness (in
parallel), prints the per-session summary table, and contrasts the cases:
the near-linear case needs roughly three times as many attempts to clear,
while the exponential case reaches higher price spikes.  All CSV outputs
land in per-case directories and are byte-reproducible from the config.
"""

from pathlib import Path

from powermarket import parse_config, run_experiment

OUT = Path(__file__).parent / "output"

summaries = {}
for case in ("EXP", "LIN"):
    cfg = parse_config(f"""
case = {case}
master_seed = 1234
sessions = 10
output_dir = {OUT / f'batch-{case.lower()}'}
""")
    summaries[case] = run_experiment(cfg, workers=4)
    s = summaries[case]
    print(f"\ncase {case}: pooled mean {s.pooled_mean:.2f}, pooled max {s.pooled_max:.1f}")
    print((s.output_dir / "summary.txt").read_text())

exp, lin = summaries["EXP"], summaries["LIN"]
steps_exp = sorted(x.total_steps for x in exp.sessions)[5]
steps_lin = sorted(x.total_steps for x in lin.sessions)[5]
print(f"median attempts per session: EXP {steps_exp}, LIN {steps_lin} "
      f"(x{steps_lin / steps_exp:.1f})")
print(f"maximum price: EXP {exp.pooled_max:.1f} vs LIN {lin.pooled_max:.1f}")
