"""First-order interaction conditions on frames, checked by brute force.

Issues form an antichain in a frame, so the order tests between issues in
the antisymmetry-style conditions reduce to identity.  The Euclidean
condition quantifies over two *distinct* replacement candidates: the
degenerate instantiation with a repeated witness would force every
substituted issue to substitute itself, which is not what the condition
is used for here.
"""

from __future__ import annotations

import itertools

from ..errors import SortError

CONDITION_IDS = (
    "symmetric",
    "antisymmetric",
    "unanimous",
    "reflexive",
    "transitive",
    "globally_indifferent",
    "euclidean",
    "single_stepped",
    "reasonably_ductile",
    "pos_coherent",
    "neg_coherent",
    "neg_pref_coherent",
    "pos_pref_coherent",
    "equanimous",
    "bicoherent",
    "intransigent",
    "I_pos_coherent",
    "I_neg_coherent",
    "IRS_coherent",
)


def _symmetric(f):
    return all((m, j, n) in f.S for n, j, m in f.S)


def _antisymmetric(f):
    return all(
        m == n for n, j, m in f.S if (m, j, n) in f.S
    )


def _unanimous(f):
    return all(
        (m, i, n) in f.S for m, j, n in f.S for i in f.C
    )


def _reflexive(f):
    return all((m, j, m) in f.S for j in f.C for m in f.D)


def _transitive(f):
    return all(
        (o, j, m) in f.S
        for n, j, m in f.S
        for o, j2, n2 in f.S
        if j2 == j and n2 == n
    )


def _globally_indifferent(f):
    return all(
        (m, j, n) in f.S for j in f.C for m in f.D for n in f.D
    )


def _euclidean(f):
    for n, j, m in f.S:
        for o, j2, m2 in f.S:
            if j2 == j and m2 == m and o != n and (n, j, o) not in f.S:
                return False
    return True


def _single_stepped(f):
    return all(
        n == m2
        for n, j, m1 in f.S
        for m2, j2, n2 in f.S
        if j2 == j and n2 == n
    )


def _reasonably_ductile(f):
    for j, i in f.I:
        for m in f.D:
            if (m, j) not in f.R or (m, i) not in f.R:
                continue
            for n in f.D:
                if (n, j) in f.R and (n, i, m) not in f.S:
                    return False
    return True


def _pos_coherent(f):
    return all((m, j, m) in f.S for m, j in f.R)


def _neg_coherent(f):
    return all((m, j) in f.R for n, j, m in f.S if n == m)


def _neg_pref_coherent(f):
    return all((n, j) in f.R for n, j, m in f.S)


def _pos_pref_coherent(f):
    return all(
        (n, j, m) in f.S for n, j in f.R for m in f.D
    )


def _equanimous(f):
    return all(
        (n, j, m) in f.S
        for m, j in f.R
        for n, j2 in f.R
        if j2 == j
    )


def _bicoherent(f):
    return all(
        (m, j, n) in f.S
        for m, j in f.R
        for n in f.D
        if (n, j) not in f.R
    )


def _intransigent(f):
    return all(m == n for n, j, m in f.S if (m, j) in f.R)


def _i_pos_coherent(f):
    return all(
        (m, i, n) in f.S for m, j, n in f.S for j2, i in f.I if j2 == j
    )


def _i_neg_coherent(f):
    return all(
        (m, j, n) in f.S for m, i, n in f.S for j, i2 in f.I if i2 == i
    )


def _irs_coherent(f):
    return all(
        (n, i, m) in f.S
        for n, j in f.R
        for j2, i in f.I
        if j2 == j
        for m in f.D
    )


_CHECKS = {
    "symmetric": _symmetric,
    "antisymmetric": _antisymmetric,
    "unanimous": _unanimous,
    "reflexive": _reflexive,
    "transitive": _transitive,
    "globally_indifferent": _globally_indifferent,
    "euclidean": _euclidean,
    "single_stepped": _single_stepped,
    "reasonably_ductile": _reasonably_ductile,
    "pos_coherent": _pos_coherent,
    "neg_coherent": _neg_coherent,
    "neg_pref_coherent": _neg_pref_coherent,
    "pos_pref_coherent": _pos_pref_coherent,
    "equanimous": _equanimous,
    "bicoherent": _bicoherent,
    "intransigent": _intransigent,
    "I_pos_coherent": _i_pos_coherent,
    "I_neg_coherent": _i_neg_coherent,
    "IRS_coherent": _irs_coherent,
}


def check_condition(frame, condition_id):
    """Evaluate one named condition on a frame by direct quantification."""
    if condition_id not in _CHECKS:
        raise SortError(f"unknown condition {condition_id!r}")
    return _CHECKS[condition_id](frame)


def all_conditions(frame):
    return {cid: check_condition(frame, cid) for cid in CONDITION_IDS}


def enumerate_structures(nc, nd):
    """Every frame on fixed carriers of the given sizes."""
    agents = tuple(f"j{k}" for k in range(nc))
    issues = tuple(f"m{k}" for k in range(nd))
    i_pairs = list(itertools.product(agents, agents))
    r_pairs = list(itertools.product(issues, agents))
    s_triples = list(itertools.product(issues, agents, issues))

    def subsets(pool):
        for bits in range(1 << len(pool)):
            yield frozenset(
                pool[k] for k in range(len(pool)) if bits >> k & 1
            )

    from .frames import RelationalStructure

    for i_set in subsets(i_pairs):
        for r_set in subsets(r_pairs):
            for s_set in subsets(s_triples):
                yield RelationalStructure(
                    C=agents, D=issues, I=i_set, R=r_set, S=s_set
                )
