"""
Comparing strategies
====================

Each strategy is evaluated several times; every evaluation gives one mean
first-passage time.  Two samples of these are compared with Welch's t-test
when both look normal and Mann-Whitney U otherwise, at a Bonferroni-corrected
level.  The same environments are reused for every strategy.
"""

import numpy as np

from bnswarm import experiments as ex
from bnswarm.compare import compare, power_report
from bnswarm.network import generate_random
from bnswarm.survival import estimate_records

cfg = ex.config_from_dict({
    "arena": {"trial_duration": 1000},
    "evaluation": {"trials": 3, "evaluations": 4, "seed": 1},
})


def evaluation_means(controller):
    return np.array([estimate_records(recs).mean_fpt for recs in ex.run_evaluations(cfg, controller)])


baseline = evaluation_means(cfg.baseline())
print("LMCRW baseline:", np.round(baseline))
for seed in range(3):
    tfs = evaluation_means(generate_random(20, seed))
    verdict = compare(tfs, baseline, n_comparisons=3)
    print(f"RBN {seed}: {np.round(tfs)} -> {verdict.label} ({verdict.test}, p={verdict.p_value:.3f}, "
          f"corrected {verdict.p_corrected:.3f})")

# how many evaluations are needed to see a 1.2 sd difference?
for n in (5, 10, 20):
    print(f"power with {n} evaluations per group: {power_report(n, 1.2):.2f}")
