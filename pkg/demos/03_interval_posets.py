"""Intervals under reflection length and their combinatorial model.

The isometries between the identity and w (those where lengths add) form a
poset isomorphic to an explicit model built from subspaces: elliptic
elements ordered by reverse inclusion of fixed sets, hyperbolic ones by
inclusion of move-sets.  The demo samples an interval and checks the two
orders agree, then computes meets and joins in the model.
"""

from scherk import (
    PosetContext,
    Vector,
    interval_contains,
    interval_leq,
    inv_map,
    join,
    leq,
    meet,
    rank,
    random_isometry,
    sample_interval,
)

print("== the interval below a random length-3 isometry ==")
w = random_isometry(3, seed=42, reflections=3, translate=True)
print("w has reflection length", rank(inv_map(w)))

samples = sample_interval(w, seed=7, count=8)
print("sampled", len(samples), "interval members; all between 1 and w:",
      all(interval_contains(w, u) for u in samples))

agree = True
for u in samples:
    for v in samples:
        agree &= interval_leq(w, u, v) == leq(inv_map(u), inv_map(v))
print("interval order matches the model order on all sampled pairs:", agree)

print()
print("== meets and joins in the model ==")
# Use a plane move-set as the ambient model; every element below it is fair
# game for meet and join queries.
from scherk import AffineSubspaceV, Hyperbolic, Elliptic, AffineSubspaceE, Point
from scherk.linalg import span

plane = Hyperbolic(AffineSubspaceV(
    span([Vector([1, 0, 0]), Vector([0, 1, 0])]), Vector([0, 0, 1])))
ctx = PosetContext(top=plane)

p1 = Elliptic(AffineSubspaceE.single_point(Point([0, 0, 0])))
p2 = Elliptic(AffineSubspaceE.single_point(Point([0, 1, 0])))
print("meet of two point-fixing elements:", meet(p1, p2, ctx))

line1 = Hyperbolic(AffineSubspaceV(span([Vector([1, 0, 0])]), Vector([0, 0, 1])))
line2 = Hyperbolic(AffineSubspaceV(span([Vector([0, 1, 0])]), Vector([0, 0, 1])))
print("join of two crossing line move-sets:", join(line1, line2, ctx))

# Disjoint parallel move-sets have no single greatest lower bound; the
# model answers with the whole family of maximal lower bounds instead.
line3 = Hyperbolic(AffineSubspaceV(span([Vector([1, 0, 0])]), Vector([0, 1, 1])))
family = meet(line1, line3, ctx)
print("meet of disjoint parallels is a family of elliptics with direction",
      ["(" + ", ".join(str(c) for c in b) + ")" for b in family.direction.basis])
