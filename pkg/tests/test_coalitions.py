"""Coalition algebra and influence modalities."""

import itertools
import random

import pytest

from agenda_algebra.coalitions import (
    AgentSet,
    BoxDirection,
    Coalition,
    Direction,
    InfluenceRelation,
    influence_box,
    influence_diamond,
)
from agenda_algebra.errors import UnknownAgent


def test_agent_set_basics():
    agents = AgentSet(["a", "b", "c"])
    c = agents.coalition(["a", "c"])
    assert c.members() == ("a", "c")
    assert "a" in c and "b" not in c
    assert (~c).members() == ("b",)
    assert len(agents.everyone()) == 3
    with pytest.raises(UnknownAgent):
        agents.coalition(["zz"])
    with pytest.raises(UnknownAgent):
        AgentSet(["a", "a"])


def test_empty_influence_gives_empty_diamonds():
    agents = AgentSet(["a", "b"])
    influence = InfluenceRelation(agents, [])
    for members in ([], ["a"], ["a", "b"]):
        c = agents.coalition(members)
        for direction in Direction:
            assert influence_diamond(influence, c, direction).mask == 0


def test_two_agent_definitions():
    agents = AgentSet(["a", "b"])
    influence = InfluenceRelation(agents, [("a", "b")])
    b = agents.coalition(["b"])
    a = agents.coalition(["a"])
    assert influence_diamond(
        influence, b, Direction.INFLUENCERS
    ).members() == ("a",)
    assert influence_diamond(
        influence, a, Direction.AUDIENCE
    ).members() == ("b",)
    # a influences only b, b influences nothing at all
    assert influence_box(
        influence, b, BoxDirection.ONLY_INTO
    ).members() == ("a", "b")
    assert influence_box(
        influence, agents.everyone(), BoxDirection.ONLY_INTO
    ).members() == ("a", "b")


def test_influencers_of_everyone_is_domain():
    agents = AgentSet(["a", "b", "c"])
    influence = InfluenceRelation(agents, [("a", "b"), ("c", "b"), ("b", "c")])
    got = influence_diamond(
        influence, agents.everyone(), Direction.INFLUENCERS
    )
    assert set(got.members()) == {"a", "b", "c"}
    influence2 = InfluenceRelation(agents, [("a", "c")])
    got2 = influence_diamond(
        influence2, agents.everyone(), Direction.INFLUENCERS
    )
    assert got2.members() == ("a",)


def _random_influence(rng, agents):
    pairs = [
        (x, y)
        for x in agents.names
        for y in agents.names
        if rng.random() < 0.4
    ]
    return InfluenceRelation(agents, pairs)


def test_normality_exhaustive_small():
    for n in (1, 2, 3, 4):
        agents = AgentSet([f"a{i}" for i in range(n)])
        rng = random.Random(n)
        for _ in range(10):
            influence = _random_influence(rng, agents)
            masks = range(1 << n)
            for direction in Direction:
                def dia(mask):
                    return influence_diamond(
                        influence, Coalition(agents, mask), direction
                    ).mask

                assert dia(0) == 0
                for m1, m2 in itertools.product(masks, repeat=2):
                    assert dia(m1 | m2) == dia(m1) | dia(m2)
            for direction in BoxDirection:
                def box(mask):
                    return influence_box(
                        influence, Coalition(agents, mask), direction
                    ).mask

                assert box(agents.full_mask) == agents.full_mask
                for m1, m2 in itertools.product(masks, repeat=2):
                    assert box(m1 & m2) == box(m1) & box(m2)


def test_dualities_and_adjunctions():
    rng = random.Random(5)
    for n in (2, 3, 4):
        agents = AgentSet([f"a{i}" for i in range(n)])
        for _ in range(20):
            influence = _random_influence(rng, agents)
            for mask in range(1 << n):
                c = Coalition(agents, mask)
                assert influence_box(
                    influence, c, BoxDirection.ONLY_INTO
                ) == ~influence_diamond(influence, ~c, Direction.INFLUENCERS)
            for m1, m2 in itertools.product(range(1 << n), repeat=2):
                c, d = Coalition(agents, m1), Coalition(agents, m2)
                audience = influence_diamond(influence, c, Direction.AUDIENCE)
                only_into = influence_box(influence, d, BoxDirection.ONLY_INTO)
                assert (audience <= d) == (c <= only_into)
                influencers = influence_diamond(
                    influence, c, Direction.INFLUENCERS
                )
                only_from = influence_box(influence, d, BoxDirection.ONLY_FROM)
                assert (influencers <= d) == (c <= only_from)
