"""
Levy-modulated correlated random walks
======================================

The baseline controller draws a turning angle from a wrapped Cauchy law and a
straight step from a symmetric alpha-stable law.  Twenty robots search for a
target; the first-passage times are summarised by a Weibull fit to the
Kaplan-Meier curve.
"""

import numpy as np

from bnswarm.controllers import LmcrwParams, sample_stable, sample_wrapped_cauchy
from bnswarm.sim import ArenaConfig, run_trial
from bnswarm.survival import SurvivalDataset, estimate_records, kaplan_meier

rng = np.random.default_rng(0)

# rho sets the persistence of the heading, alpha the weight of long steps
for rho in (0.0, 0.75, 0.9):
    theta = sample_wrapped_cauchy(rho, rng, 20_000)
    print(f"rho={rho}: mean resultant length {abs(np.mean(np.exp(1j * theta))):.3f}")
for alpha in (1.2, 2.0):
    x = np.abs(sample_stable(alpha, rng, 200_000))
    print(f"alpha={alpha}: 99.9th percentile of |step| {np.quantile(x, 0.999):.1f}")

# a handful of trials in the default arena (short ones, to keep this quick)
arena = ArenaConfig(trial_duration=1000)
params = LmcrwParams(rho=0.75, alpha=1.8)
records = [run_trial(arena, params, seed) for seed in range(6)]
found = sum((~r.censored).sum() for r in records)
print(f"{found} of {6 * arena.robot_count} robots found the target within {arena.trial_duration:.0f} s")

km = kaplan_meier(SurvivalDataset.from_records(records))
print("Kaplan-Meier CDF at 250/500/1000 s:", np.round(km([250, 500, 1000]), 3))
fit = estimate_records(records)
print(f"Weibull lambda={fit.scale:.0f} s, k={fit.shape:.2f}, mean first passage {fit.mean_fpt:.0f} s")
