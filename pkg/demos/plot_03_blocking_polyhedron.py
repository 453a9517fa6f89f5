"""
Vertices of the blocking polyhedron
===================================

Q(H) = {a >= 0 : a(F) >= 1 for every edge F}.  Its vertices are computed in
exact rationals.  A clutter is Fulkersonian when every vertex is integral,
and this holds for H exactly when it holds for its blocker.
"""

from clutterlab import blocker, extreme_points, hoffman_integrality_check, is_fulkersonian, make_simple
from clutterlab.exact_linalg import format_vector

C3 = make_simple(3, [[1, 2], [2, 3], [1, 3]])
for v in extreme_points(C3):
    print(format_vector(v))

print("fractional:", [format_vector(v) for v in extreme_points(C3).fractional()])
print("Fulkersonian C3:", is_fulkersonian(C3), "| blocker:", is_fulkersonian(blocker(C3)))

# an integer cost whose LP minimum is not an integer
ok, (c, value) = hoffman_integrality_check(C3, 1)
print("Hoffman witness", c, "LP value", value)

C5 = make_simple(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])
ok, witness = hoffman_integrality_check(C5, 1)
print("C5 Fulkersonian:", is_fulkersonian(C5), witness)
