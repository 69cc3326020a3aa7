"""Quivers as skew-symmetric matrices, and what mutation does to them.

Run:  python demos/01_mutation_basics.py
"""

from quivergreen import (
    Quiver,
    b_matrix_rank,
    induced_cycles,
    induced_subquiver,
    is_acyclic,
    mutate,
    opposite,
    separating_edges,
    sources,
)
from quivergreen.catalog import get, make_rank3
from quivergreen.io import format_arrows

# An oriented triangle: one arrow 1->2, one 2->3, one 3->1.
triangle = make_rank3(1, 1, 1)
print("triangle:          ", format_arrows(triangle))

# Mutating at vertex 2 composes the path 1->2->3 into 1->3, which cancels
# against the existing 3->1, then reverses the arrows at 2.
print("mutate at 2:       ", format_arrows(mutate(triangle, 2)))

# Mutation is an involution.
print("mutate twice equal:", mutate(mutate(triangle, 2), 2) == triangle)

# The all-2 triangle (the Markov quiver) mutates into an isomorphic copy of
# itself, just with the cycle reversed.
markov = make_rank3(2, 2, 2)
print("\nmarkov:            ", format_arrows(markov))
print("mutate at 2:       ", format_arrows(mutate(markov, 2)))

# The rank of the exchange matrix never changes under mutation.
k4 = get("K4").quiver
print("\nK4:                ", format_arrows(k4))
print("rank(B):           ", b_matrix_rank(k4))
print("rank after mu_3:   ", b_matrix_rank(mutate(k4, 3)))

# Structure inspection: acyclicity, sources, chordless cycles, restriction.
print("acyclic:           ", is_acyclic(k4), "   sources:", sources(k4))
print("chordless cycles:")
for cycle, oriented in induced_cycles(k4):
    print(f"   {cycle} {'oriented' if oriented else 'non-oriented'}")

sub, mapping = induced_subquiver(k4, {2, 3, 4})
print("restriction to {2,3,4} (relabelled):", format_arrows(sub))
print("new -> old labels:", mapping)

# Arrows no bi-infinite directed path crosses; deleting the endpoints of one
# decomposes the quiver for localization arguments.
print("separating arrows: ", separating_edges(k4))
print("opposite quiver:   ", format_arrows(opposite(k4)))
