"""
Evolving a network controller
=============================

A small genetic algorithm: genomes are real vectors whose integer parts are
the network's connection and gate symbols.  Fitness is the Weibull mean
first-passage time over a fixed set of environments (lower is better).
"""

from bnswarm.evolution import GaConfig, post_evaluate, run_evolution
from bnswarm.sim import ArenaConfig

# a scaled-down arena and GA so the demo finishes in about a minute
arena = ArenaConfig(robot_count=10, trial_duration=600)
config = GaConfig(population=10, generations=8, eval_trials=3, delta_runs=50, delta_horizon=1000)


def show(row):
    print(f"gen {row['generation']:2d}: best {row['best_tf']:9.0f} s  hall of fame {row['hof_tf']:9.0f} s"
          f"  delta of best {row['delta_of_best']:+.3f}")


result = run_evolution(config, arena, size=18, seed=3, progress=show)

# re-evaluate on fresh environments: the training fitness is optimistic
post = post_evaluate(result.best_genome, arena, trials=10, seed=99)
first = post_evaluate(result.initial_best_genome, arena, trials=10, seed=99)
print(f"post-evaluated: evolved {post.mean_fpt:.0f} s vs generation-0 best {first.mean_fpt:.0f} s")
print(f"mean commanded straight motion of the evolved network: {post.straight_mean_s:.1f} s")
