"""
A tunnel that crosses itself
============================

In the one-parameter family the sphere of the second generator slides from
5 - 2i to 5 + 2i as t runs over [0, 4]. Three marked points on the tunnel's
lifts span a triangle whose signed area changes sign, and where it vanishes
two lifts of the tunnel meet.
"""

from pathlib import Path

from fordtunnels import (
    find_t0,
    ford_footprint,
    lift_pair_distance,
    prop42_family,
    render_svg,
    scene_from_footprint,
    signed_area,
    triangle_points,
)

for t in (0.0, 1.0, 2.0, 3.0, 4.0):
    rep = prop42_family(t)
    pts = triangle_points(rep)
    print(f"t = {t}: area {signed_area(pts):+.4f}, lifts {lift_pair_distance(rep).dist:.6f} apart")

found = find_t0("prop42", k=1)
print("area vanishes at t0 =", found.t0, "foot between the other lift's ends:", found.between)

# Draw both lifts over the footprint at t0.
fp = ford_footprint(prop42_family(found.t0), max_len=1, lattice_bound=0)
scene = scene_from_footprint(fp, [(found.witness[0], "lift a"), (found.witness[1], "lift b")])
out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
(out / "crossing_tunnel.svg").write_text(render_svg(scene))
print("wrote", out / "crossing_tunnel.svg")
