"""Quasi-Cartan companions as a parity system over GF(2).

Assign + or - to every edge of the underlying graph; a companion is
admissible when every chordless oriented cycle carries an odd number of +
signs and every non-oriented one an even number.  Solvability is decided by
linear algebra over the two-element field, and failure comes with a minimal
set of mutually inconsistent cycles.  Only mutation-acyclic quivers can
carry an admissible companion, so an unsatisfiable system is a certificate
of non-acyclicity.  Run:  python demos/04_admissibility.py
"""

from quivergreen import is_mutation_acyclic, solve_admissibility
from quivergreen.catalog import get, make_lin3, make_rank3
from quivergreen.io import format_arrows

# An acyclic quiver: every chordless cycle is non-oriented, all-minus works.
path = make_lin3(1, 2)
result = solve_admissibility(path)
print("path:", format_arrows(path))
print("satisfiable:", result.satisfiable, " signs:", dict(result.assignment.signs))

# The oriented triangle needs an odd number of + signs on its one cycle.
tri = make_rank3(1, 1, 1)
result = solve_admissibility(tri)
print("\ntriangle signs:", dict(result.assignment.signs))

# Three bundled quivers have contradictory parity systems.
for name in ("K4", "W5", "W5p"):
    q = get(name).quiver
    result = solve_admissibility(q)
    print(f"\n{name}: satisfiable = {result.satisfiable}")
    for cycle, oriented in result.witness_cycles:
        kind = "oriented" if oriented else "non-oriented"
        print(f"   inconsistent cycle {cycle} ({kind})")

# That contradiction certifies the quiver can never be mutated acyclic.
probe = is_mutation_acyclic(get("K4").quiver)
print("\nK4 mutation-acyclic:", probe.kind)

# A quiver that is cyclic but one mutation away from acyclic.
probe = is_mutation_acyclic(make_rank3(1, 1, 1))
print("triangle mutation-acyclic:", probe.kind, "via mutations", probe.sequence)
