"""Scenario ingestion and end-to-end deliberation analysis.

A scenario document declares agents, scored parameters, a winning rule,
two named candidate profiles, and the three relations (relevance,
influence, substitution) over canonical issue ids:

    param:<name>                     projection issue of one parameter
    sum:<names><=<k>                 threshold issue over a parameter set
    sumset:<names>                   sugar: every threshold over the set

Names inside an id are comma-sorted; <k> is an exact rational.  Under the
total-dominance rule a bare parameter name is accepted as sugar for its
param: issue.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import features as ft
from . import hetero as ht
from . import lattice as lt
from . import partitions as pt
from .coalitions import AgentSet, InfluenceRelation
from .errors import (
    AgendaAlgebraError,
    CapExceeded,
    DegenerateThreshold,
    NotInLattice,
    ParseError,
    UnknownParameter,
    ValidationError,
)


@dataclass
class ScenarioOptions:
    materialize_cap: int = lt.MATERIALIZE_CAP
    profile_cap: int = ft.PROFILE_CAP
    extra_agendas: dict = field(default_factory=dict)


@dataclass
class Scenario:
    agents: tuple
    space: ft.FeatureSpace
    winning_rule: str
    candidates: dict            # name -> profile id, insertion-ordered
    relevance: dict             # agent -> tuple of issue ids
    influence: tuple            # (from, to) pairs
    substitution: tuple         # (agent, from id, to id) triples
    options: ScenarioOptions
    document: dict              # normalized source document


def _parse_rational(text, problems, where):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        problems.append(f"{where}: {text!r} is not a rational")
        return None


def parse_issue_id(issue_id, space, rule):
    """Expand one issue-id string into canonical ids (sumset may fan out)."""
    if issue_id.startswith("param:"):
        name = issue_id[len("param:"):]
        if name not in space.names:
            raise UnknownParameter(f"unknown parameter {name!r}")
        return [f"param:{name}"]
    if issue_id.startswith("sumset:"):
        names = issue_id[len("sumset:"):].split(",")
        sums = ft.achievable_sums(space, names)
        canon = ",".join(sorted(names))
        return [f"sum:{canon}<={k}" for k in sums[:-1]]
    if issue_id.startswith("sum:"):
        body = issue_id[len("sum:"):]
        if "<=" not in body:
            raise UnknownParameter(f"malformed issue id {issue_id!r}")
        names_part, k_part = body.split("<=", 1)
        names = names_part.split(",")
        k = Fraction(k_part)
        canon = ",".join(sorted(names))
        space._param_positions(names)
        return [f"sum:{canon}<={k}"]
    if rule == ft.TOTAL_DOMINANCE and issue_id in space.names:
        return [f"param:{issue_id}"]
    raise UnknownParameter(f"malformed issue id {issue_id!r}")


def issue_from_id(issue_id, space):
    """Build the issue agenda named by a canonical id."""
    if issue_id.startswith("param:"):
        name = issue_id[len("param:"):]
        return lt.Issue(issue_id, ft.projection_agenda(space, [name]))
    body = issue_id[len("sum:"):]
    names_part, k_part = body.split("<=", 1)
    agenda = ft.threshold_issue(
        space, names_part.split(","), Fraction(k_part)
    )
    return lt.Issue(issue_id, agenda)


def load_scenario(text):
    """Parse and fully validate a scenario document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    problems = []

    agents = doc.get("agents") or []
    if not agents or len(set(agents)) != len(agents):
        problems.append("agents: need a nonempty list of unique names")

    rule = doc.get("winning_rule")
    if rule not in (ft.TOTAL_DOMINANCE, ft.SUM):
        problems.append(f"winning_rule: unknown rule {rule!r}")
        rule = ft.TOTAL_DOMINANCE

    scales = []
    for spec in doc.get("parameters") or []:
        name = spec.get("name", "?")
        scale_doc = spec.get("scale") or {}
        kind = scale_doc.get("kind", "chain")
        values = tuple(scale_doc.get("values") or ())
        covers = tuple(tuple(c) for c in scale_doc.get("covers") or ())
        numeric = None
        if scale_doc.get("numeric"):
            numeric = {}
            for label, raw in scale_doc["numeric"].items():
                k = _parse_rational(raw, problems, f"parameter {name} numeric")
                if k is not None:
                    numeric[label] = k
        try:
            scales.append((name, ft.Scale(name, values, kind, covers, numeric)))
        except AgendaAlgebraError as exc:
            problems.append(f"parameter {name}: {exc}")
    if not scales:
        problems.append("parameters: need at least one")
    if rule == ft.SUM:
        for name, scale in scales:
            if not scale.is_sum_ready():
                problems.append(
                    f"parameter {name}: the sum rule needs rational chains"
                )
    if problems:
        raise ValidationError(problems)

    options = ScenarioOptions(**(doc.get("options") or {}))
    try:
        space = ft.build_space(scales, cap=options.profile_cap)
    except CapExceeded:
        raise
    except AgendaAlgebraError as exc:
        raise ValidationError([str(exc)])

    candidates = {}
    for cname, assignment in (doc.get("candidates") or {}).items():
        try:
            candidates[cname] = space.profile_id(assignment)
        except AgendaAlgebraError as exc:
            problems.append(f"candidate {cname}: {exc}")
    if len(doc.get("candidates") or {}) != 2:
        problems.append("candidates: exactly two named profiles are needed")

    def expand(issue_id, where):
        try:
            return parse_issue_id(str(issue_id), space, rule)
        except AgendaAlgebraError as exc:
            problems.append(f"{where}: {exc}")
            return []

    relevance = {}
    for agent, ids in (doc.get("relevance") or {}).items():
        if agent not in agents:
            problems.append(f"relevance: unknown agent {agent!r}")
            continue
        out = []
        for issue_id in ids:
            out.extend(expand(issue_id, f"relevance of {agent}"))
        relevance[agent] = tuple(dict.fromkeys(out))

    influence = []
    for pair in doc.get("influence") or []:
        if len(pair) != 2 or any(a not in agents for a in pair):
            problems.append(f"influence: bad pair {pair!r}")
        else:
            influence.append(tuple(pair))

    substitution = []
    for triple in doc.get("substitution") or []:
        agent = triple.get("agent")
        if agent not in agents:
            problems.append(f"substitution: unknown agent {agent!r}")
            continue
        src = expand(triple.get("from", ""), "substitution from")
        dst = expand(triple.get("to", ""), "substitution to")
        for s in src:
            for d in dst:
                substitution.append((agent, s, d))

    for name, ids in (options.extra_agendas or {}).items():
        flat = []
        for issue_id in ids:
            flat.extend(expand(issue_id, f"named agenda {name}"))
        options.extra_agendas[name] = flat

    if problems:
        raise ValidationError(problems)
    return Scenario(
        agents=tuple(agents),
        space=space,
        winning_rule=rule,
        candidates=candidates,
        relevance=relevance,
        influence=tuple(influence),
        substitution=tuple(substitution),
        options=options,
        document=doc,
    )


def serialize_scenario(scenario):
    """Canonical JSON text for a scenario (reparses to the same analysis)."""
    return json.dumps(scenario.document, indent=2, sort_keys=True)


def build_structure(scenario):
    """Assemble the heterogeneous structure of a scenario.

    The issue universe is exactly the set of issues named by the
    relevance and substitution relations.
    """
    space = scenario.space
    ids = []
    for ids_for_agent in scenario.relevance.values():
        ids.extend(ids_for_agent)
    for _, src, dst in scenario.substitution:
        ids.extend((src, dst))
    ids = list(dict.fromkeys(ids))
    if not ids:
        raise ValidationError(
            ["the scenario names no issues in relevance or substitution"]
        )
    try:
        issue_set = lt.IssueSet([issue_from_id(i, space) for i in ids])
    except (DegenerateThreshold, NotInLattice) as exc:
        # non-binary projections are not yes/no questions on this space
        raise ValidationError([str(exc)])
    lattice = lt.build_lattice(issue_set, cap=scenario.options.materialize_cap)
    agent_set = AgentSet(scenario.agents)
    relevance = ht.RelevanceRelation(
        [
            (issue_id, agent)
            for agent, ids_for_agent in scenario.relevance.items()
            for issue_id in ids_for_agent
        ]
    )
    substitution = ht.SubstitutionRelation(
        [(dst, agent, src) for agent, src, dst in scenario.substitution]
    )
    influence = InfluenceRelation(agent_set, scenario.influence)
    return ht.HeteroStructure(
        agent_set, lattice, influence, relevance, substitution
    )


@dataclass(frozen=True)
class Appraisal:
    """An agenda together with its verdict on the candidate pair."""

    agenda: ft.Agenda
    decision: ft.Decision
    winner: str | None

    def to_json(self):
        doc = self.agenda.to_json()
        doc["verdict"] = self.decision.verdict
        doc["winner"] = self.winner
        return doc

    def verdict_text(self):
        if self.winner:
            return f"prefers {self.winner}"
        return self.decision.verdict


@dataclass
class DeliberationReport:
    candidates: tuple
    per_agent: dict
    common: Appraisal
    distributed: Appraisal
    aggregate: Appraisal
    candidate_set: list | None
    named: dict

    def to_json(self):
        return {
            "candidates": list(self.candidates),
            "agents": {a: ap.to_json() for a, ap in self.per_agent.items()},
            "common_agenda": self.common.to_json(),
            "distributed_agenda": self.distributed.to_json(),
            "substitution_aggregate": self.aggregate.to_json(),
            "candidate_set": (
                None
                if self.candidate_set is None
                else [ap.to_json() for ap in self.candidate_set]
            ),
            "named_agendas": {
                name: ap.to_json() for name, ap in self.named.items()
            },
        }

    def to_text(self):
        first, second = self.candidates
        lines = [f"candidates: {first} vs {second}"]
        for agent, ap in self.per_agent.items():
            lines.append(
                f"  agent {agent}: {ap.agenda.label()} -> {ap.verdict_text()}"
            )
        lines.append(
            f"  common agenda: {self.common.agenda.label()}"
            f" -> {self.common.verdict_text()}"
        )
        lines.append(
            f"  distributed agenda: {self.distributed.agenda.label()}"
            f" -> {self.distributed.verdict_text()}"
        )
        lines.append(
            f"  substitution aggregate: {self.aggregate.agenda.label()}"
            f" -> {self.aggregate.verdict_text()}"
        )
        if self.candidate_set is not None:
            lines.append("  one-step coarsening candidates:")
            for ap in self.candidate_set:
                lines.append(
                    f"    {ap.agenda.label()} -> {ap.verdict_text()}"
                )
        for name, ap in self.named.items():
            lines.append(
                f"  named agenda {name}: {ap.agenda.label()}"
                f" -> {ap.verdict_text()}"
            )
        return "\n".join(lines)


def analyze(scenario):
    """Full deliberation analysis of a two-candidate scenario."""
    space = scenario.space
    rule = scenario.winning_rule
    (first_name, first), (second_name, second) = scenario.candidates.items()

    def appraise(agenda):
        decision = ft.decide(space, rule, agenda, first, second)
        winner = None
        if decision.verdict == ft.PREFERS_FIRST:
            winner = first_name
        elif decision.verdict == ft.PREFERS_SECOND:
            winner = second_name
        return Appraisal(agenda, decision, winner)

    structure = build_structure(scenario)
    everyone = structure.agents.everyone()
    per_agent = {
        agent: appraise(structure.agent_agenda(agent))
        for agent in scenario.agents
    }
    common = appraise(ht.common_agenda(structure, everyone))
    distributed = appraise(ht.distributed_agenda(structure, everyone))
    pieces = []
    for receiver in scenario.agents:
        for owner in scenario.agents:
            if receiver == owner:
                continue
            own = ht.common_agenda(
                structure, structure.agents.coalition([owner])
            )
            pieces.append(
                ht.subst_transform(
                    structure,
                    structure.agents.coalition([receiver]),
                    own,
                )
            )
    aggregate = appraise(structure.lattice.meet(pieces))

    candidate_set = None
    if rule == ft.TOTAL_DOMINANCE:
        agent_params = {}
        for agent in scenario.agents:
            params = [
                issue_id[len("param:"):]
                for issue_id in scenario.relevance.get(agent, ())
                if issue_id.startswith("param:")
            ]
            if params:
                agent_params[agent] = params
        if len(agent_params) >= 2:
            candidate_set = [
                appraise(a) for a in lt.candidate_set_C(space, agent_params)
            ]

    named = {}
    for name, ids in sorted(scenario.options.extra_agendas.items()):
        issues = [issue_from_id(i, space).agenda for i in ids]
        if issues:
            named[name] = appraise(ft.meet_agendas(*issues))
        else:
            named[name] = appraise(
                ft.Agenda(
                    pt.Partition.single_block(space.n), ft.MeetOfIssues(())
                )
            )

    return DeliberationReport(
        candidates=(first_name, second_name),
        per_agent=per_agent,
        common=common,
        distributed=distributed,
        aggregate=aggregate,
        candidate_set=candidate_set,
        named=named,
    )
