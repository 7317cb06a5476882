"""Agenda lattices meet-generated by a chosen set of yes/no issues.

The lattice holds the meets of arbitrary subsets of its generator issues
plus the top element.  Joins inside the lattice are computed by generator
filtering (meet of every generator above all arguments), never by the
join of E(W), which may leave the lattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import partitions as pt
from .errors import (
    EmptyAgendaSet,
    GroundMismatch,
    NotInLattice,
    NotMaterialized,
)
from .features import (
    Agenda,
    MeetOfIssues,
    meet_agendas,
    projection_agenda,
)

MATERIALIZE_CAP = 20


@dataclass(frozen=True)
class Issue:
    """A named generator: a bipartition agenda with a canonical id."""

    id: str
    agenda: Agenda


class IssueSet:
    """Ordered, uniquely named list of bipartition issues on one ground set."""

    def __init__(self, issues):
        issues = list(issues)
        if not issues:
            raise EmptyAgendaSet("an issue set needs at least one issue")
        ids = [i.id for i in issues]
        if len(set(ids)) != len(ids):
            raise NotInLattice("duplicate issue ids")
        n = issues[0].agenda.partition.n
        for issue in issues:
            if issue.agenda.partition.n != n:
                raise GroundMismatch("issues live on different ground sets")
            if len(issue.agenda.partition.blocks) != 2:
                raise NotInLattice(
                    f"issue {issue.id} is not a bipartition"
                )
        self.issues = tuple(issues)
        self.n = n

    def __iter__(self):
        return iter(self.issues)

    def __len__(self):
        return len(self.issues)

    def by_id(self, issue_id):
        for issue in self.issues:
            if issue.id == issue_id:
                return issue
        raise NotInLattice(f"unknown issue id {issue_id!r}")


class AgendaLattice:
    """The meet-closure of an issue set, materialized when small enough."""

    def __init__(self, issue_set, elements=None):
        self.issue_set = issue_set
        self.n = issue_set.n
        self.top = Agenda(
            pt.Partition.single_block(self.n), MeetOfIssues(())
        )
        self.bottom = self._meet_of(list(issue_set))
        self.elements = elements

    def _meet_of(self, issues):
        if not issues:
            return self.top
        part = pt.meet_all([i.agenda.partition for i in issues])
        return Agenda(part, MeetOfIssues(tuple(sorted(i.id for i in issues))))

    @property
    def materialized(self):
        return self.elements is not None

    def generators_above(self, part):
        """Issues whose partition lies above the given one."""
        return [
            issue
            for issue in self.issue_set
            if pt.refines(part, issue.agenda.partition)
        ]

    def member_form(self, agenda):
        """Canonical lattice element equal to the agenda, if it is one.

        An agenda belongs to the lattice iff it equals the meet of the
        generators above it (the top element always belongs).
        """
        part = agenda.partition
        if part.n != self.n:
            raise GroundMismatch("agenda lives on a different ground set")
        above = self.generators_above(part)
        candidate = self._meet_of(above)
        if candidate.partition != part:
            raise NotInLattice(
                f"agenda {agenda.label()} is not a meet of the issue set"
            )
        return candidate

    def __contains__(self, agenda):
        try:
            self.member_form(agenda)
            return True
        except NotInLattice:
            return False
        except GroundMismatch:
            return False

    def meet(self, agendas):
        agendas = list(agendas)
        if not agendas:
            return self.top
        return meet_agendas(*agendas)

    def d_join(self, agendas):
        """Least upper bound inside the lattice by generator filtering."""
        agendas = [self.member_form(a) for a in agendas]
        if not agendas:
            return self.bottom
        shared = [
            issue
            for issue in self.issue_set
            if all(
                pt.refines(a.partition, issue.agenda.partition)
                for a in agendas
            )
        ]
        return self._meet_of(shared)

    # -- enumeration-backed structure ------------------------------------

    def _require_materialized(self):
        if not self.materialized:
            raise NotMaterialized(
                "materialize the lattice first (generator count within cap)"
            )

    def leq(self, a, b):
        return pt.refines(a.partition, b.partition)

    def is_distributive(self):
        """Scan all triples for x & (y | z) == (x & y) | (x & z).

        A finite lattice is distributive exactly when no triple violates
        the law (equivalently, when it embeds no pentagon or diamond).
        Returns (True, None) or (False, witness_triple).
        """
        self._require_materialized()
        elems = self.elements
        join_cache = {}

        def dj(a, b):
            key = (a.partition, b.partition)
            if key not in join_cache:
                join_cache[key] = self.d_join([a, b])
            return join_cache[key]

        for x, y, z in itertools.product(elems, repeat=3):
            lhs = pt.meet(x.partition, dj(y, z).partition)
            rhs = self.d_join(
                [
                    Agenda(pt.meet(x.partition, y.partition)),
                    Agenda(pt.meet(x.partition, z.partition)),
                ]
            ).partition
            if lhs != rhs:
                return False, (x, y, z)
        return True, None

    def is_complemented(self):
        """Every element has a complement (meet bottom, join top)."""
        self._require_materialized()
        for a in self.elements:
            if not any(
                pt.meet(a.partition, b.partition) == self.bottom.partition
                and self.d_join([a, b]).partition == self.top.partition
                for b in self.elements
            ):
                return False
        return True

    def issues_meet_prime(self):
        """Are all generators meet-prime over meets of element pairs?

        Checked, not assumed: several distribution laws only hold when a
        generator above a meet is above one of the meetands.
        """
        self._require_materialized()
        for issue in self.issue_set:
            gp = issue.agenda.partition
            for a, b in itertools.combinations_with_replacement(
                self.elements, 2
            ):
                met = pt.meet(a.partition, b.partition)
                if pt.refines(met, gp) and not (
                    pt.refines(a.partition, gp)
                    or pt.refines(b.partition, gp)
                ):
                    return False
        return True

    def covers(self):
        """Covering pairs (lower, upper) of the materialized order."""
        self._require_materialized()
        elems = self.elements
        pairs = []
        for a, b in itertools.permutations(elems, 2):
            if a.partition == b.partition or not self.leq(a, b):
                continue
            if not any(
                c.partition != a.partition
                and c.partition != b.partition
                and self.leq(a, c)
                and self.leq(c, b)
                for c in elems
            ):
                pairs.append((a, b))
        return pairs


def build_lattice(issue_set, cap=MATERIALIZE_CAP):
    """Meet-close the issue set; stay lazy above the generator cap.

    Materialization iterates pairwise meets to a fixed point, so its cost
    tracks the number of distinct elements rather than the number of
    generator subsets.
    """
    lattice = AgendaLattice(issue_set)
    if len(issue_set) > cap:
        return lattice
    seen = {lattice.top.partition: lattice.top}
    frontier = []
    for issue in issue_set:
        part = issue.agenda.partition
        if part not in seen:
            agenda = Agenda(part, MeetOfIssues((issue.id,)))
            seen[part] = agenda
            frontier.append(agenda)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(seen.values()):
                part = pt.meet(a.partition, b.partition)
                if part not in seen:
                    ids = tuple(
                        sorted(
                            i.id for i in lattice.generators_above(part)
                        )
                    )
                    agenda = Agenda(part, MeetOfIssues(ids))
                    seen[part] = agenda
                    fresh.append(agenda)
        frontier = fresh
    ordered = sorted(
        seen.values(), key=lambda a: (len(a.partition.blocks), a.label())
    )
    lattice.elements = tuple(ordered)
    return lattice


def projection_issue_set(space, names=None):
    """One projection issue per parameter (binary-scale parameters)."""
    names = list(names) if names is not None else list(space.names)
    issues = []
    for name in names:
        agenda = projection_agenda(space, [name])
        issues.append(Issue(id=f"param:{name}", agenda=agenda))
    return IssueSet(issues)


def coarsenings_crs1(space, names):
    """Agendas obtained by dropping one parameter from the given set."""
    names = sorted(names)
    if not names:
        raise EmptyAgendaSet("cannot coarsen the empty parameter set")
    out = []
    for drop in names:
        rest = [x for x in names if x != drop]
        out.append(projection_agenda(space, rest))
    return out


def candidate_set_C(space, agent_params):
    """All meets where each agent vetoes one parameter of every other agent.

    ``agent_params`` maps each agent to their relevant parameter set; the
    result is duplicate-free and ordered by coarseness then label.
    """
    agents = sorted(agent_params)
    if len(agents) < 2:
        raise EmptyAgendaSet("the candidate set needs at least two agents")
    slots = []
    for i in agents:
        for j in agents:
            if i != j:
                slots.append((i, j, coarsenings_crs1(space, agent_params[j])))
    out = {}
    for choice in itertools.product(*(options for _, _, options in slots)):
        agenda = meet_agendas(*choice)
        out.setdefault(agenda.partition, agenda)
    return sorted(
        out.values(), key=lambda a: (-len(a.partition.blocks), a.label())
    )
