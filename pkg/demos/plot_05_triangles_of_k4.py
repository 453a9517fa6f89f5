"""
The triangles of K4
===================

Four triangles on the six edges of K4 give a clutter whose blocking
polyhedron is integral, yet its edge ideal is not normal: the product of all
six variables is integral over I^2 without lying in I^2.  This matches the
failure of the max-flow min-cut property at the all-ones weight.
"""

from fractions import Fraction

from clutterlab import (
    blocker,
    caratheodory_decompose,
    closure_membership,
    edge_ideal,
    extreme_points,
    is_fulkersonian,
    is_normal_up_to,
    power_membership,
)
from clutterlab.verify import is_mengerian_bounded, named, verify_gvv

Q6 = named("Q6")
I = edge_ideal(Q6)
one = (1,) * 6

print("Fulkersonian:", is_fulkersonian(Q6))
print("Mengerian on {0,1}^6:", is_mengerian_bounded(Q6, 1))

v = closure_membership(one, I, 2)
print("closure weights:", [str(x) for x in v.certificate])
print("in I^2:", power_membership(one, I, 2).member)
print("square in I^4:", power_membership((2,) * 6, I, 4).certificate)
print("normal:", is_normal_up_to(I, 3))

# 1/2 of the all-ones vector is a quarter of each triangle summed
d = caratheodory_decompose(one, 2, extreme_points(blocker(Q6)))
print("p =", d.p, "lambdas:", [(i, str(w)) for i, w in d.lambdas])
assert d.reconstruct(extreme_points(blocker(Q6))) == (Fraction(1, 2),) * 6

print(verify_gvv(Q6).sides)

# the blocker behaves differently on the packing side
print("blocker Mengerian on [0,2]^6:", is_mengerian_bounded(blocker(Q6), 2))
