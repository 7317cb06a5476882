"""The hiring scenario: two agents, three binary parameters, dominance.

Two candidates differ on reference letters (first parameter) and on a
specialist parameter each; the committee members care about different
parameter pairs.  The demo walks from individual agendas through joins,
meets, one-step coarsenings, and two substitution patterns that tilt the
aggregate either way.

Run:  python3 demos/02_hiring_committee.py
"""

from agenda_algebra import features as ft
from agenda_algebra import lattice as lt
from agenda_algebra.scenario import analyze, load_scenario
from agenda_algebra.scenarios import scenario_text

space = ft.build_space(
    [("r", ft.binary("r")), ("p", ft.binary("p")), ("l", ft.binary("l"))]
)
john = space.profile_id({"r": "1", "p": "1", "l": "0"})
mary = space.profile_id({"r": "0", "p": "1", "l": "1"})
print(f"profile space: {space.n} profiles (the 3-cube)")
print("John:", space.labels(john), " Mary:", space.labels(mary))

rule = ft.TOTAL_DOMINANCE
for names in (["p", "r"], ["l", "r"], ["r"], ["p", "l"], ["r", "p", "l"]):
    agenda = ft.projection_agenda(space, names)
    verdict = ft.decide(space, rule, agenda, john, mary).verdict
    print(f"  agenda over {names}: {verdict}")

# Each agent vetoes one parameter of the other agent's agenda; the four
# resulting agendas span every outcome of the deliberation.
print("\none-step coarsening candidates:")
for agenda in lt.candidate_set_C(
    space, {"alan": ["p", "r"], "betty": ["l", "r"]}
):
    verdict = ft.decide(space, rule, agenda, john, mary).verdict
    print(f"  {agenda.label()}: {verdict}")

# The bundled scenario files carry the full structure, including the two
# substitution relations discussed in the write-up.
for name in ("hiring_s1", "hiring_s2"):
    report = analyze(load_scenario(scenario_text(name)))
    print(f"\n=== {name} ===")
    print(report.to_text())
