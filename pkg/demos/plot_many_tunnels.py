"""
Several tunnels at once
=======================

The n-parameter family repeats the one-parameter picture n times along the
real axis. Each tunnel k < n has its own parameter t_k, and each one crosses
itself at t_k = 2 while the domain stays simple.
"""

from fordtunnels import delta_generators, dual_geodesic, find_t0, is_simple_ford, min_translate_distance, thm43_family

n = 4
for k in range(1, n):
    found = find_t0("thm43", k=k, n=n)
    print(f"tunnel {k}: t_k = {found.t0:.12f}")

rep = thm43_family(n, [1.0, 3.0, 0.5, 2.0])
print("simple at (1, 3, 0.5, 2):", is_simple_ford(rep).verdict)

# At t = (2, ..., 2) each tunnel meets one of its translates.
rep = thm43_family(n, [2.0] * n)
for k, delta in enumerate(delta_generators(rep)[:-1], start=1):
    hit = min_translate_distance(rep, dual_geodesic(delta), max_len=3)
    print(f"tunnel {k}: closest translate {hit.dist:.3g} via {hit.word}")
