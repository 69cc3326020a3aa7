"""Which cyclic rank-3 quivers admit a maximal green sequence.

The cyclic quiver with multiplicities (a, b, c) has one exactly when some
multiplicity equals 1; the sequence is then one of two explicit 4-step
patterns.  Run:  python demos/03_rank3_classification.py
"""

from quivergreen import decide_mgs
from quivergreen.catalog import make_rank3

print("verdicts for the cyclic rank-3 quiver, multiplicities a, b, c")
for a in range(1, 6):
    print(f"\n  a = {a}        c=1   c=2   c=3   c=4   c=5")
    for b in range(1, 6):
        row = []
        for c in range(1, 6):
            verdict = decide_mgs(make_rank3(a, b, c))
            row.append("yes" if verdict.yes else " no")
        print(f"     b = {b}    " + "   ".join(row))

print("\nexplicit sequences when a = 1:")
for b, c in [(3, 2), (2, 3), (2, 2)]:
    cert = decide_mgs(make_rank3(1, b, c)).certificate
    print(f"  (1,{b},{c}) -> {cert.sequence}")

print("\nobstruction when everything is at least 2:")
verdict = decide_mgs(make_rank3(2, 3, 4))
print(" ", verdict.obstruction)
