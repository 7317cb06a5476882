"""Tour of the partition lattice E(W): meets, joins, irreducibles.

Run:  python3 demos/01_partition_playground.py
"""

from agenda_algebra import partitions as pt
from agenda_algebra import viz

# Partitions on {0,..,4} are built from blocks and canonicalized.
p = pt.make_partition(5, [[0, 1], [2, 3], [4]])
q = pt.make_partition(5, [[0], [1, 2], [3, 4]])
print("p      =", p)
print("q      =", q)

# The meet superposes the two block structures; the join glues
# overlapping blocks together.
print("p & q  =", pt.meet(p, q))
print("p | q  =", pt.join(p, q))
print("p <= q?", pt.refines(p, q))

# Atoms merge exactly one pair; coatoms are yes/no questions.
atoms, coatoms = pt.enumerate_irreducibles(4)
print(f"\nE(W) on 4 points has {len(atoms)} atoms and {len(coatoms)} coatoms")
print("an atom:  ", atoms[0], "->", pt.classify_irreducible(atoms[0]).value)
print("a coatom: ", coatoms[0], "->", pt.classify_irreducible(coatoms[0]).value)

# Both closed forms, n(n-1)/2 and 2^(n-1)-1, in one sweep.
for n in range(2, 9):
    a, c = pt.enumerate_irreducibles(n)
    print(f"n={n}: atoms={len(a):3d}  coatoms={len(c):4d}")

# The modal operators spread a subset over classes (diamond) or keep
# only the classes it swallows whole (box), and they form an adjunction.
e = pt.make_partition(6, [[0, 1, 2], [3, 4], [5]])
x = frozenset({0, 3})
print("\ne      =", e)
print("<e>X   =", sorted(pt.diamond_set(e, x)))
print("[e]X   =", sorted(pt.box_set(e, x)))
print("[e]{0,1,2,5} =", sorted(pt.box_set(e, frozenset({0, 1, 2, 5}))))

# A preorder quotients through any partition; mutual comparability
# recovers the partition when the two are strongly compatible.
base = pt.Preorder.from_pairs(4, [(0, 1), (1, 2), (2, 3)], close=True)
quotient = pt.preorder_from_equiv(pt.make_partition(4, [[0, 1], [2], [3]]), base)
print("\nquotient relation size:", int(quotient.holds.sum()))
print("classes of the base:", pt.equiv_from_preorder(base))

# Small Hasse diagrams render to DOT text.
print("\nDOT for all of E({a,b,c}):\n")
print(viz.agenda_lattice_dot(viz.equivalence_lattice(3)))
