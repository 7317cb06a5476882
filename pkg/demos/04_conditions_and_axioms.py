"""Interaction conditions on frames, and their sequent counterparts.

Frames carry three relations: influence between agents, relevance of
issues to agents, and substitution of issues by issues per agent.
Eleven first-order conditions on these relations match sequent axioms
exactly, with atoms read over single agents and single issues; the demo
scans random frames and an exhaustive slice to show the match.

Run:  python3 demos/04_conditions_and_axioms.py
"""

import random

from agenda_algebra.logic import conditions as cn
from agenda_algebra.logic import correspondence as co
from agenda_algebra.logic.frames import RelationalStructure

frame = RelationalStructure(
    C=("ann", "bob"),
    D=("price", "range"),
    I=frozenset({("ann", "bob")}),
    R=frozenset({("price", "ann"), ("range", "bob")}),
    S=frozenset({("price", "ann", "price"), ("price", "bob", "range")}),
)

print("condition report for a small frame:")
for cid, value in cn.all_conditions(frame).items():
    print(f"  {cid:22s} {value}")

print("\ncondition vs axiom, pair by pair:")
for report in co.all_pairs_agree(frame):
    print(f"  {report.pair:22s} fo={report.fo!s:5s} axiom={report.axiom!s:5s}"
          f" agree={report.agree}")

# An exhaustive slice: every frame with one agent and two issues.
bad = 0
count = 0
for f in cn.enumerate_structures(1, 2):
    count += 1
    bad += sum(1 for r in co.all_pairs_agree(f) if not r.agree)
print(f"\nexhaustive slice (1 agent, 2 issues): {count} frames, "
      f"{bad} disagreements")

# And a seeded random sweep at size three.
rng = random.Random(7)


def random_frame():
    agents = ("j0", "j1", "j2")
    issues = ("m0", "m1", "m2")

    def pick(pool, p=0.3):
        return frozenset(x for x in pool if rng.random() < p)

    return RelationalStructure(
        C=agents, D=issues,
        I=pick([(a, b) for a in agents for b in agents]),
        R=pick([(m, j) for m in issues for j in agents]),
        S=pick([(n, j, m) for n in issues for j in agents for m in issues]),
    )


bad = sum(
    1
    for _ in range(100)
    for r in co.all_pairs_agree(random_frame())
    if not r.agree
)
print(f"random sweep at size 3: 100 frames, {bad} disagreements")
