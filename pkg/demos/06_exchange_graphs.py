"""Exchange graphs up to isomorphism, and the subgraph with green sequences.

Run:  python demos/06_exchange_graphs.py
"""

from quivergreen import (
    Quiver,
    enumerate_acyclic,
    explore,
    graph_to_dot,
    invariant_report,
    psi_component,
)
from quivergreen.catalog import get, make_rank3
from quivergreen.io import format_arrows
from quivergreen.obstructions import describe_obstruction

# The mutation class of the oriented path on three vertices has exactly four
# members up to relabelling: three path orientations plus a triangle.
a3 = Quiver.from_arrows(3, [(1, 2), (2, 3)])
graph = explore(a3, max_nodes=100, max_mult=10)
print(f"path class: {len(graph)} members, complete={graph.complete}")
for node in graph.ordered_nodes():
    print(f"   layer {node.layer}: {format_arrows(node.quiver)}")
print("acyclic members:", len(enumerate_acyclic(a3)))

# Infinite classes are truncated once multiplicities pass a threshold.
wild = explore(make_rank3(2, 2, 3), max_nodes=25, max_mult=16)
print(f"\nwild rank-3 class: {len(wild)} members found, complete={wild.complete}")

# The component of classes admitting a maximal green sequence around the
# fully connected rank-4 quiver: 17 classes, none acyclic, fenced in by
# quivers that provably have none.
k4 = get("K4").quiver
res = psi_component(k4, max_len=16)
print(
    f"\nK4 MGS component: {res.size} classes, {res.acyclic_count()} acyclic, "
    f"complete={res.complete}"
)
print(f"boundary ({len(res.boundary)} classes):")
for entry in res.boundary[:4]:
    print("  -", describe_obstruction(entry.obstruction))
print("  ...")

# Graphviz export: green boxes admit a sequence, red boxes are obstructed.
dot = graph_to_dot(res.graph, res.boundary)
print(f"\nDOT export: {len(dot.splitlines())} lines, starts with:")
print("\n".join(dot.splitlines()[:4]))

# One-stop invariant summary for a quiver.
print("\ninvariant report for K4:")
for key, value in sorted(invariant_report(k4, max_len=16).items()):
    print(f"   {key}: {value}")
