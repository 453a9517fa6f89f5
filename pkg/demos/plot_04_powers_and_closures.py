"""
Ordinary powers, integral closures and symbolic powers
======================================================

Every monomial in I^k lies in the integral closure of I^k, which in turn
lies inside the symbolic power.  On the triangle the monomial x1 x2 x3
separates the last two.
"""

from clutterlab import (
    closure_gens,
    closure_membership,
    edge_ideal,
    make_simple,
    power,
    power_membership,
    symbolic_membership,
    symbolic_power_gens,
)

C3 = make_simple(3, [[1, 2], [2, 3], [1, 3]])
I = edge_ideal(C3)

print("I^2        ", power(I, 2).gens)
print("closure I^2", closure_gens(I, 2).gens)
print("I^(2)      ", symbolic_power_gens(C3, 2).gens)

c = (1, 1, 1)
print("x1x2x3 in I^2:      ", power_membership(c, I, 2).member)
print("x1x2x3 in closure:  ", closure_membership(c, I, 2).member)
print("x1x2x3 in I^(2):    ", symbolic_membership(c, C3, 2).member)

# a violated cover explains a failed symbolic query
print(symbolic_membership((0, 0, 1), C3, 1))
