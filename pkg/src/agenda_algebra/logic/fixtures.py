"""Frame pairs witnessing that certain conditions are not modally definable.

Each case pins a condition that holds on the source frame(s) and fails on
the target, where the target is either a surjective-morphism image or a
disjoint union.  Case 3's source frame is infinite, so only its finite
target is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnsupportedCase
from .frames import RelationalStructure

MORPHISM = "morphism"
UNION = "union"


@dataclass(frozen=True)
class GtFixture:
    case: int
    kind: str
    condition: str
    f1: RelationalStructure | None
    f2: RelationalStructure
    maps: tuple | None = None          # (agent map, issue map) for morphisms
    expect_f1: bool | None = None
    expect_f2: bool | None = None
    expect_union: bool | None = None
    partial: bool = False              # true when f1 could not be built


def gt_fixture(case, full=False):
    """Build one of the eight non-definability cases (1..8)."""
    if case == 1:
        f1 = RelationalStructure(
            C=("j1", "j2"),
            D=("m1", "m2", "m3"),
            S=frozenset({("m1", "j1", "m2"), ("m2", "j2", "m3")}),
        )
        f2 = RelationalStructure(
            C=("i",),
            D=("n1", "n2", "n3"),
            S=frozenset({("n1", "i", "n2"), ("n2", "i", "n3")}),
        )
        maps = (
            {"j1": "i", "j2": "i"},
            {"m1": "n1", "m2": "n2", "m3": "n3"},
        )
        return GtFixture(
            1, MORPHISM, "transitive", f1, f2, maps,
            expect_f1=True, expect_f2=False,
        )
    if case == 2:
        f1 = RelationalStructure(
            C=("j1",), D=("m1",), S=frozenset({("m1", "j1", "m1")})
        )
        f2 = RelationalStructure(
            C=("j2",), D=("m2",), S=frozenset({("m2", "j2", "m2")})
        )
        return GtFixture(
            2, UNION, "reflexive", f1, f2,
            expect_f1=True, expect_f2=True, expect_union=False,
        )
    if case == 3:
        if full:
            raise UnsupportedCase(
                "case 3's source frame is infinite; only the target exists"
            )
        f2 = RelationalStructure(
            C=("i",),
            D=("n0", "n1"),
            S=frozenset({("n0", "i", "n1"), ("n1", "i", "n0")}),
        )
        return GtFixture(
            3, MORPHISM, "antisymmetric", None, f2,
            expect_f2=False, partial=True,
        )
    if case == 4:
        f1 = RelationalStructure(
            C=("j1", "j2"),
            D=("m1", "m2", "m3"),
            S=frozenset({("m1", "j1", "m2"), ("m3", "j2", "m1")}),
        )
        f2 = RelationalStructure(
            C=("i",),
            D=("n1", "n2", "n3"),
            S=frozenset({("n1", "i", "n2"), ("n3", "i", "n1")}),
        )
        maps = (
            {"j1": "i", "j2": "i"},
            {"m1": "n1", "m2": "n2", "m3": "n3"},
        )
        return GtFixture(
            4, MORPHISM, "single_stepped", f1, f2, maps,
            expect_f1=True, expect_f2=False,
        )
    if case == 5:
        f1 = RelationalStructure(
            C=("j1", "j2"),
            D=("m1", "m2", "m3"),
            S=frozenset({("m1", "j1", "m3"), ("m2", "j2", "m3")}),
        )
        f2 = RelationalStructure(
            C=("i",),
            D=("n1", "n2", "n3"),
            S=frozenset({("n1", "i", "n3"), ("n2", "i", "n3")}),
        )
        maps = (
            {"j1": "i", "j2": "i"},
            {"m1": "n1", "m2": "n2", "m3": "n3"},
        )
        return GtFixture(
            5, MORPHISM, "euclidean", f1, f2, maps,
            expect_f1=True, expect_f2=False,
        )
    if case == 6:
        f1 = RelationalStructure(
            C=("j1",), D=("m1", "n1"), S=frozenset({("m1", "j1", "n1")})
        )
        f2 = RelationalStructure(
            C=("j2",), D=("m2", "n2"), S=frozenset({("m2", "j2", "n2")})
        )
        return GtFixture(
            6, UNION, "unanimous", f1, f2,
            expect_f1=True, expect_f2=True, expect_union=False,
        )
    if case == 7:
        f1 = RelationalStructure(
            C=("j1",), D=("m1",), R=frozenset({("m1", "j1")})
        )
        f2 = RelationalStructure(
            C=("j2",), D=("m2",), R=frozenset({("m2", "j2")})
        )
        return GtFixture(
            7, UNION, "bicoherent", f1, f2,
            expect_f1=True, expect_f2=True, expect_union=False,
        )
    if case == 8:
        f1 = RelationalStructure(
            C=("j1", "i1"),
            D=("m1", "m1p", "n1"),
            R=frozenset({("m1", "j1"), ("n1", "j1"), ("m1p", "i1")}),
            I=frozenset({("j1", "i1")}),
        )
        f2 = RelationalStructure(
            C=("j2", "i2"),
            D=("m2", "n2"),
            R=frozenset({("m2", "j2"), ("n2", "j2"), ("m2", "i2")}),
            I=frozenset({("j2", "i2")}),
        )
        maps = (
            {"j1": "j2", "i1": "i2"},
            {"m1": "m2", "m1p": "m2", "n1": "n2"},
        )
        return GtFixture(
            8, MORPHISM, "reasonably_ductile", f1, f2, maps,
            expect_f1=True, expect_f2=False,
        )
    raise UnsupportedCase(f"no fixture case {case}")
