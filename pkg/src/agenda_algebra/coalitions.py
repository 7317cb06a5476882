"""The Boolean algebra of coalitions with influence-relation modalities."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import UnknownAgent


class AgentSet:
    """Ordered list of unique agent names; coalitions are bitmasks over it."""

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise UnknownAgent("an agent set needs at least one agent")
        if len(set(names)) != len(names):
            raise UnknownAgent("duplicate agent names")
        self.names = names
        self.position = {name: i for i, name in enumerate(names)}
        self.full_mask = (1 << len(names)) - 1

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def mask_of(self, members):
        mask = 0
        for name in members:
            if name not in self.position:
                raise UnknownAgent(f"unknown agent {name!r}")
            mask |= 1 << self.position[name]
        return mask

    def coalition(self, members):
        return Coalition(self, self.mask_of(members))

    def everyone(self):
        return Coalition(self, self.full_mask)

    def nobody(self):
        return Coalition(self, 0)


@dataclass(frozen=True)
class Coalition:
    """A subset of agents, stored positionally for O(1) Boolean algebra."""

    agents: AgentSet
    mask: int

    def members(self):
        return tuple(
            name
            for i, name in enumerate(self.agents.names)
            if self.mask >> i & 1
        )

    def __contains__(self, name):
        return bool(self.mask >> self.agents.position[name] & 1)

    def __and__(self, other):
        return Coalition(self.agents, self.mask & other.mask)

    def __or__(self, other):
        return Coalition(self.agents, self.mask | other.mask)

    def __invert__(self):
        return Coalition(self.agents, self.agents.full_mask & ~self.mask)

    def __le__(self, other):
        return self.mask & other.mask == self.mask

    def __len__(self):
        return self.mask.bit_count()

    def __repr__(self):
        return "Coalition{" + ",".join(self.members()) + "}"


class InfluenceRelation:
    """Who influences whom: a set of (influencer, influenced) pairs."""

    def __init__(self, agents, pairs):
        self.agents = agents
        pairs = frozenset(tuple(p) for p in pairs)
        for a, b in pairs:
            if a not in agents.position or b not in agents.position:
                raise UnknownAgent(f"influence pair ({a}, {b}) names a stranger")
        self.pairs = pairs
        n = len(agents)
        self.into = [0] * n    # into[j]: agents influencing j
        self.out_of = [0] * n  # out_of[j]: agents influenced by j
        for a, b in pairs:
            ia, ib = agents.position[a], agents.position[b]
            self.into[ib] |= 1 << ia
            self.out_of[ia] |= 1 << ib


class Direction(enum.Enum):
    INFLUENCERS = "Influencers"
    AUDIENCE = "Audience"


class BoxDirection(enum.Enum):
    ONLY_INTO = "OnlyInto"
    ONLY_FROM = "OnlyFrom"


def influence_diamond(influence, coalition, direction):
    """Influencers of some member, or audience of some member."""
    table = (
        influence.into
        if direction is Direction.INFLUENCERS
        else influence.out_of
    )
    mask = 0
    for i in range(len(influence.agents)):
        if coalition.mask >> i & 1:
            mask |= table[i]
    return Coalition(influence.agents, mask)


def influence_box(influence, coalition, direction):
    """Dual boxes: complement, diamond, complement."""
    inner = (
        Direction.INFLUENCERS
        if direction is BoxDirection.ONLY_INTO
        else Direction.AUDIENCE
    )
    return ~influence_diamond(influence, ~coalition, inner)
