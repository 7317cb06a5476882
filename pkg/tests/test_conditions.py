"""First-order condition checkers and their implication chains."""

import random

import pytest

from agenda_algebra.errors import SortError
from agenda_algebra.logic import conditions as cn
from agenda_algebra.logic.fixtures import gt_fixture
from agenda_algebra.logic.frames import RelationalStructure, disjoint_union


def test_vacuous_s():
    frame = RelationalStructure(C=("j",), D=("m", "n"))
    for cid in ("symmetric", "transitive", "euclidean", "antisymmetric",
                "unanimous", "single_stepped", "intransigent"):
        assert cn.check_condition(frame, cid)
    assert not cn.check_condition(frame, "reflexive")
    assert not cn.check_condition(frame, "globally_indifferent")


def test_unknown_condition():
    frame = RelationalStructure(C=("j",), D=("m",))
    with pytest.raises(SortError):
        cn.check_condition(frame, "no_such_condition")


def test_full_s_is_everything():
    agents, issues = ("j1", "j2"), ("m", "n")
    full = frozenset(
        (n_, j, m) for n_ in issues for j in agents for m in issues
    )
    frame = RelationalStructure(C=agents, D=issues, S=full)
    for cid in ("symmetric", "transitive", "reflexive", "euclidean",
                "globally_indifferent", "unanimous"):
        assert cn.check_condition(frame, cid)
    assert not cn.check_condition(frame, "antisymmetric")


def test_reflexive_fails_on_union():
    fixture = gt_fixture(2)
    assert cn.check_condition(fixture.f1, "reflexive")
    assert cn.check_condition(fixture.f2, "reflexive")
    union = disjoint_union(fixture.f1, fixture.f2)
    assert not cn.check_condition(union, "reflexive")


def test_bicoherent_fails_on_union():
    fixture = gt_fixture(7)
    union = disjoint_union(fixture.f1, fixture.f2)
    assert not cn.check_condition(union, "bicoherent")


def _random_frame(rng, nc=3, nd=3, p=0.3):
    agents = tuple(f"j{k}" for k in range(nc))
    issues = tuple(f"m{k}" for k in range(nd))

    def pick(pool, prob):
        return frozenset(x for x in pool if rng.random() < prob)

    return RelationalStructure(
        C=agents,
        D=issues,
        I=pick([(a, b) for a in agents for b in agents], p),
        R=pick([(m, j) for m in issues for j in agents], p),
        S=pick(
            [(n, j, m) for n in issues for j in agents for m in issues], p
        ),
    )


def test_implication_chains_random():
    rng = random.Random(3)
    stepped_hits = equanimous_hits = 0
    for _ in range(400):
        frame = _random_frame(rng, p=rng.choice([0.1, 0.3, 0.7]))
        if cn.check_condition(frame, "single_stepped"):
            stepped_hits += 1
            assert cn.check_condition(frame, "transitive")
        if cn.check_condition(frame, "equanimous"):
            equanimous_hits += 1
            assert cn.check_condition(frame, "pos_coherent")
    assert stepped_hits > 0 and equanimous_hits > 0


def test_all_conditions_report():
    frame = _random_frame(random.Random(4))
    report = cn.all_conditions(frame)
    assert set(report) == set(cn.CONDITION_IDS)
    assert len(cn.CONDITION_IDS) == 19


def test_enumerate_structures_count():
    assert sum(1 for _ in cn.enumerate_structures(1, 1)) == 8
    assert sum(1 for _ in cn.enumerate_structures(1, 2)) == 128
    assert sum(1 for _ in cn.enumerate_structures(2, 1)) == 256
