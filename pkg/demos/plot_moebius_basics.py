"""
Möbius maps and isometric spheres
=================================

Matrices in SL(2, C) act on the upper half-space. Each map that moves
infinity has an isometric sphere, and the map carries that sphere onto the
isometric sphere of its inverse.
"""

from fordtunnels import (
    HalfSpacePoint,
    MoebiusMap,
    apply_interior,
    classify,
    compose,
    inverse,
    isometric_sphere,
    transform_sphere,
)

gamma = MoebiusMap(0, 1, -1, -5j)
delta = MoebiusMap(-5 - 5j, -26 - 25j, 1, 5)
print("gamma is", classify(gamma), "with trace", gamma.trace)

# The sphere of gamma sits over -5i, the sphere of its inverse over 0.
s = isometric_sphere(gamma)
print("I(gamma):", s.center, s.radius)
print("gamma(I(gamma)):", transform_sphere(gamma, s))
print("I(gamma^-1):", isometric_sphere(inverse(gamma)))

# Points on an isometric sphere keep their height under the map.
p = HalfSpacePoint(-5j + 0.6, 0.8)
print("height before and after:", p.h, apply_interior(gamma, p).h)

# A product whose sphere is small and tucked inside another one.
small = isometric_sphere(compose(gamma, inverse(delta)))
print("I(gamma delta^-1):", small.center, round(small.radius, 6))
