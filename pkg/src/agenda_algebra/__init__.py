"""Partition-lattice algebra of deliberation agendas and coalitions.

The package models decision making by deliberation: profile spaces over
scored parameters, agendas as partitions of the profile space, lattices
of agendas meet-generated by yes/no issues, a Boolean coalition algebra
linked to the agenda lattice by relevance/substitution operators, and
brute-force checkers for the first-order interaction conditions and
their modal counterparts.
"""

from . import (  # noqa: F401
    coalitions,
    features,
    hetero,
    lattice,
    logic,
    partitions,
    scenario,
    viz,
)

__version__ = "0.1.0"
