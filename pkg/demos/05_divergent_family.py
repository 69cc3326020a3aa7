"""A rank-4 family whose good sequences run away forever.

A vertex is good when it is not the head of a multiple arrow and mutating it
creates no induced subquiver that is known to lack a maximal green sequence.
Every maximal green sequence is a good sequence, so a quiver whose good
sequences provably never return to it cannot have one.

The family below has exactly one good vertex, and mutating there bumps two
of the parameters by a fixed positive increment every second step.

Run:  python demos/05_divergent_family.py
"""

from quivergreen import RFamilyParams, decide_mgs, good_vertices, r_family_trajectory
from quivergreen.catalog import make_r_family
from quivergreen.core import mutate, opposite
from quivergreen.io import format_arrows

q = make_r_family(0, 2, 3)
print("family member (a,b,c) = (0,2,3):", format_arrows(q))
print("good vertices:", good_vertices(q))
print("good vertices of the reversed quiver:", good_vertices(opposite(q)))

# Follow the forced good sequence literally and via the closed form.
print("\nforced trajectory:")
cur = q
for k in range(7):
    closed = r_family_trajectory(RFamilyParams(0, 2, 3), k)
    match = "ok" if closed.n == cur.n and sorted(
        m for _, _, m in closed.arrows()
    ) == sorted(m for _, _, m in cur.arrows()) else "??"
    print(f"  step {k}: {format_arrows(cur)}   [closed form {match}]")
    gv = good_vertices(cur)
    if not gv:
        break
    cur = mutate(cur, gv[0])

# The multiplicities grow without bound, so no good sequence is ever a
# maximal green sequence; the decider reports exactly that.
verdict = decide_mgs(q)
print("\nverdict:", verdict.kind)
print("obstruction:", verdict.obstruction)

for a, b, c in [(0, 2, 3), (1, 4, 3), (0, 3, 5), (2, 5, 4), (1, 2, 4)]:
    plain = decide_mgs(make_r_family(a, b, c)).kind
    rev = decide_mgs(make_r_family(a, b, c, opposite=True)).kind
    print(f"(a,b,c)=({a},{b},{c}): plain {plain}, reversed {rev}")
