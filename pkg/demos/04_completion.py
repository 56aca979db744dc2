"""Lattice failure, bowties, and the completed poset.

Hyperbolic model posets with a move-set of dimension at least two are not
lattices: certain pairs have several maximal lower bounds, arranged in a
bowtie.  Adding one layer of new elements (one per proper nontrivial
direction subspace) repairs every gap at once, and the repaired poset is a
complete lattice in which meets and joins have closed forms.
"""

from scherk import (
    AffineSubspaceE,
    AffineSubspaceV,
    Elliptic,
    Hyperbolic,
    PosetContext,
    Vector,
    coordinate_universe,
    dm_join,
    dm_meet,
    find_bowtie,
    hasse_dot,
    is_lattice,
    search_bowties,
)
from scherk.linalg import span

plane = Hyperbolic(AffineSubspaceV(
    span([Vector([1, 0, 0]), Vector([0, 1, 0])]), Vector([0, 0, 1])))
ctx = PosetContext(top=plane)

print("== a two-dimensional move-set breaks the lattice property ==")
print("is_lattice:", is_lattice(ctx))
a, b, c, d = find_bowtie(ctx)
print("bowtie upper pair:", a, "|", b)
print("bowtie lower pair:", c, "|", d)

print()
print("== exhaustive confirmation on a finite universe ==")
universe = coordinate_universe(3, plane)
bowties = search_bowties(universe)
print(f"universe of {len(universe)} coordinate-aligned elements "
      f"contains {len(bowties)} bowties")
for ua, ub, uc, ud in bowties:
    print("  shared upper direction:",
          ["(" + ", ".join(str(c) for c in v) + ")" for v in ua.move.direction.basis])

print()
print("== the completion repairs the gaps ==")
actx = PosetContext(top=plane, augmented=True)
print("augmented poset is a lattice:", is_lattice(actx))
print("meet of the bowtie's upper pair:", dm_meet([a, b], actx))
print("join of the bowtie's lower pair:", dm_join([c, d], actx))

print()
print("== Hasse diagram of the bowtie, DOT format ==")
bottom = Elliptic(AffineSubspaceE.full(3))
print(hasse_dot([plane, a, b, c, d, bottom]))
