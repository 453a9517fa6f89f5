"""
Blockers of small clutters
==========================

A clutter is a family of vertex sets where no set contains another.  Its
blocker collects the inclusion-minimal vertex covers.  Taking the blocker
twice returns the original clutter.
"""

from clutterlab import blocker, make_simple

# the 4-cycle and its minimal covers
C4 = make_simple(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
print("C4          ", C4.edges)
print("blocker(C4) ", blocker(C4).edges)
print("involution  ", blocker(blocker(C4)) == C4)

# a triangle is its own blocker
C3 = make_simple(3, [[1, 2], [2, 3], [1, 3]])
print("blocker(C3) == C3:", blocker(C3) == C3)

# duplicates and supersets are rejected by the constructor
try:
    make_simple(3, [[1, 2], [1, 2, 3]])
except ValueError as exc:
    print("rejected:", exc)
