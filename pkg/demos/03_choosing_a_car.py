"""The car scenario: five binary parameters under the sum rule.

Under the sum rule an agenda compares sum-scores over a parameter set,
so the basic yes/no issues are threshold questions ("is the sum over Y
at most k?") rather than single parameters, and the issue lattice stops
being distributive.

Run:  python3 demos/03_choosing_a_car.py
"""

from fractions import Fraction

from agenda_algebra import features as ft
from agenda_algebra import lattice as lt
from agenda_algebra.scenario import analyze, load_scenario
from agenda_algebra.scenarios import scenario_text

space = ft.build_space([(x, ft.binary(x)) for x in "sfptm"])
c1 = space.profile_id({"s": "1", "f": "0", "p": "1", "t": "0", "m": "1"})
c2 = space.profile_id({"s": "0", "f": "1", "p": "0", "t": "1", "m": "0"})
print("C1 sums: total", space.sum_score(c1, list("sfptm")),
      " A =", space.sum_score(c1, list("sfp")),
      " B =", space.sum_score(c1, list("ftm")))
print("C2 sums: total", space.sum_score(c2, list("sfptm")),
      " A =", space.sum_score(c2, list("sfp")),
      " B =", space.sum_score(c2, list("ftm")))

# A sum agenda is the meet of its threshold issues.
for names in (["f"], ["s", "f", "p"], list("sfptm")):
    print(f"\nthresholds over {names}:")
    for issue in ft.threshold_issues_for(space, names):
        print("  ", issue.label())
    print("  decomposition holds:", ft.sum_decomposition_check(space, names))

# Strict dominance wins survive the move to sums, never the reverse.
proj = ft.projection_agenda(space, ["s", "f", "p"])
summ = ft.sum_agenda(space, ["s", "f", "p"])
print("\ndominance on A:",
      ft.decide(space, ft.TOTAL_DOMINANCE, proj, c1, c2).verdict)
print("sum rule on A: ", ft.decide(space, ft.SUM, summ, c1, c2).verdict)

# The threshold lattice over two parameters already fails distributivity.
pair_space = ft.build_space([(x, ft.binary(x)) for x in ("x", "y")])
issues = lt.IssueSet([
    lt.Issue("sum:x<=0", ft.threshold_issue(pair_space, ["x"], 0)),
    lt.Issue("sum:y<=0", ft.threshold_issue(pair_space, ["y"], 0)),
    lt.Issue("sum:x,y<=0", ft.threshold_issue(pair_space, ["x", "y"], 0)),
    lt.Issue("sum:x,y<=1", ft.threshold_issue(pair_space, ["x", "y"], Fraction(1))),
])
lattice = lt.build_lattice(issues)
distributive, witness = lattice.is_distributive()
print(f"\nthreshold lattice on two parameters: {len(lattice.elements)}"
      f" elements, distributive: {distributive}")
if witness:
    x, y, z = witness
    print("  witness triple:", x.label(), "|", y.label(), "|", z.label())

# No term in the single-parameter relations can express a sum relation:
# the concrete two-profile witness shows the obstruction.
report = ft.equivariance_witness_check(space)
print("\nno-term-function witness facts all hold:", report.all_facts_hold)

print("\n=== full scenario ===")
print(analyze(load_scenario(scenario_text("car"))).to_text())
