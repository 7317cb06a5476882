"""The eight fixture frame pairs, and what brute force says about them.

Each fixture pins a condition that holds on the source frame(s) and
fails on the target, connected by a surjective forth-morphism or a
disjoint union.  The bounded equivalence checker then compares the two
validity sets over all depth-2 sequents with one atom per sort --- and
finds, for every fixture, a concrete sequent telling the frames apart,
so the claimed invariance does not hold for this term language.

Run:  python3 demos/05_frame_fixtures.py   (takes ~1 minute)
"""

from agenda_algebra.logic import conditions as cn
from agenda_algebra.logic import correspondence as co
from agenda_algebra.logic.fixtures import UNION, gt_fixture
from agenda_algebra.logic.frames import check_forth_morphism, disjoint_union

for case in (1, 2, 3, 4, 5, 6, 7, 8):
    fixture = gt_fixture(case)
    print(f"\ncase {case}: {fixture.condition} ({fixture.kind})")
    if fixture.partial:
        print("  source frame is infinite; only the target is built")
        print("  target satisfies the condition:",
              cn.check_condition(fixture.f2, fixture.condition))
        continue
    print("  source satisfies the condition:",
          cn.check_condition(fixture.f1, fixture.condition))
    if fixture.kind == UNION:
        target = disjoint_union(fixture.f1, fixture.f2)
        print("  union satisfies the condition:",
              cn.check_condition(target, fixture.condition))
    else:
        target = fixture.f2
        print("  target satisfies the condition:",
              cn.check_condition(target, fixture.condition))
        report = check_forth_morphism(fixture.maps, fixture.f1, fixture.f2)
        print(f"  morphism: surjective={report.surjective}"
              f" forth I/R/S={report.forth_I}/{report.forth_R}/{report.forth_S}")
    equivalence = co.bounded_modal_equivalence(fixture.f1, target)
    print(f"  bounded equivalence: {equivalence}")
