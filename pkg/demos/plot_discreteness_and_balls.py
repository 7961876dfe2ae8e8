"""
Discreteness alarm and epsilon balls
====================================

A discrete group with a rank-two cusp cannot have an isometric sphere wider
than its shortest cusp translation. Shrinking the lattice under fixed
generators trips that alarm. Separately, near the crossing parameter the two
tunnel lifts come within any epsilon of each other.
"""

from fordtunnels import (
    CompressionBodyRep,
    discreteness_alarm,
    enumerate_elements,
    epsilon_ball_witness,
    lift_pair_distance,
    prop42_family,
    thm43_family,
)
from fordtunnels.errors import TooFarApart

rep = thm43_family(3, [2.0, 2.0, 2.0])
res = discreteness_alarm(rep, enumerate_elements(rep, 2))
print("lattice (33, 10i): alarm", res.alarm, "T =", res.min_translation, "max radius", res.max_radius)

squeezed = CompressionBodyRep(0.5, 0.5j, rep.gammas)
res = discreteness_alarm(squeezed, enumerate_elements(squeezed, 1))
print("lattice (0.5, 0.5i): alarm", res.alarm, "offenders", [str(w) for w, _ in res.offenders])

for t in (1.5, 1.9, 1.99, 2.0):
    print(f"t = {t}: lifts {lift_pair_distance(prop42_family(t)).dist:.6f} apart")

ball = epsilon_ball_witness(prop42_family(1.99), k=1, eps=0.1)
print("eps = 0.1 ball at", ball.center, "distances", ball.dist_to_lift_a, ball.dist_to_lift_b)
try:
    epsilon_ball_witness(prop42_family(0.0), k=1, eps=0.01)
except TooFarApart as exc:
    print("t = 0:", exc)
