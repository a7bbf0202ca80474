"""
Boolean networks as motion controllers
======================================

A network of N nodes drives one robot.  The first half of its state is read
as a binary number of straight-motion ticks, the second half as a turning
angle.  After each command the network takes one synchronous step.
"""

import numpy as np

from bnswarm.chaos import activation_trace, classify, measure_delta
from bnswarm.network import decode_motion, deserialize, generate_random, serialize, step

# a random 20-node network: connection symbols, gate symbols, initial state
net = generate_random(20, seed=7)
print("in-degree per node:", net.in_degree)

# the first few commands this network would issue
cur = net
for k in range(5):
    cmd = decode_motion(cur)
    print(f"command {k}: {cmd.straight_ticks:5d} ticks, turn {cmd.turn_angle:+.3f} rad")
    cur = step(cur)

# networks travel as plain text
text = serialize(net)
print(text.splitlines()[0], "...", len(text.splitlines()), "lines")
assert deserialize(text) == net

# sensitivity to initial conditions: flip one bit, iterate, compare
res = measure_delta(net, runs=100, horizon=10_000, seed=1)
print(f"delta = {res.delta_mean:+.3f} -> {classify(res)}")

# the activation raster reveals where the dynamics settle
trace = activation_trace(net, 500)
print("cycle length:", trace.cycle_length, "after a transient of", trace.transient, "steps")
print("fraction of active nodes over the last 10 steps:", np.round(trace.raster[-10:].mean(axis=1), 2))
