"""
A simple Ford domain
====================

Two loxodromic generators whose unit isometric spheres sit far apart inside
a 100 x 100 cusp lattice. The spheres are pairwise disjoint, so they cut
out the whole Ford domain, and every longer word has a hidden sphere.
"""

from pathlib import Path

from fordtunnels import (
    example_simple_ford,
    face_pairing_check,
    ford_footprint,
    is_simple_ford,
    render_svg,
    scene_from_footprint,
)

rep = example_simple_ford()
verdict = is_simple_ford(rep)
print("verdict:", verdict.verdict, "smallest gap:", verdict.min_gap)
print("face pairings ok:", face_pairing_check(rep).ok)

# Words up to length 2; only the four generator spheres survive.
fp = ford_footprint(rep, max_len=2, lattice_bound=1)
print(len(fp.spheres), "spheres near the cell,", len(fp.visible()), "visible")
for center, radius in fp.visible_classes():
    print("  visible class", center, radius)

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
(out / "simple_ford.svg").write_text(render_svg(scene_from_footprint(fp)))
print("wrote", out / "simple_ford.svg")
