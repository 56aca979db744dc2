"""Minimal reflection factorizations and their chain form.

A factorization stores its target and a list of reflections whose product,
first factor applied last, equals the target exactly.  Minimal ones have
length equal to the Scherk length of the target.

Two constructions produce minimal factorizations:

* peeling off motion reflections, which realizes the classical upper bound
  arguments (``factor_elliptic`` and ``factor_hyperbolic``), and
* walking a maximal chain of the model poset downward from the invariant
  of the target (``chain_to_factorization``); the suffixes of the result
  map back onto the chain under the invariant map, so chains and minimal
  factorizations convert losslessly in both directions.

Point selection in the default constructions is a deterministic scan (the
canonical point of the relevant subspace, then its basis translates), so
repeated runs produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .affine import AffineSubspaceE, AffineSubspaceV, Point
from .isometry import (
    Isometry,
    Reflection,
    is_elliptic,
    min_set,
    motion_reflection,
    reflection_length,
    standard_splitting,
)
from .linalg import Matrix, Vector, orthogonal_complement, solve_affine, span
from .poset import Elliptic, Hyperbolic, PosetElement, inv_map, leq, rank


class ChainError(ValueError):
    """A supplied chain or factorization is not usable."""


@dataclass(frozen=True)
class Factorization:
    target: Isometry
    factors: tuple[Reflection, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def product(self) -> Isometry:
        """Product of the factors; the first listed factor acts last."""
        result = Isometry.identity(self.target.dim)
        for r in self.factors:
            result = result.compose(r.to_isometry())
        return result

    def is_exact(self) -> bool:
        return self.product() == self.target


def _first_point_outside(c: AffineSubspaceE, b: AffineSubspaceE) -> Point:
    """Deterministic point of c not in b; exists whenever c is not inside b."""
    for x in c.points():
        if not b.contains(x):
            return x
    raise ChainError("no point of the larger subspace escapes the smaller one")


def _first_unfixed_point(w: Isometry) -> Point:
    for x in AffineSubspaceE.full(w.dim).points():
        if w.apply(x) != x:
            return x
    raise ValueError("the identity fixes every point")


def factor_elliptic(
    w: Isometry, chain: Optional[Sequence[AffineSubspaceE]] = None
) -> Factorization:
    """Minimal factorization of an elliptic isometry.

    With no chain, repeatedly reflects away the motion of the first unfixed
    point in the deterministic scan; each step grows the fixed set by one
    dimension, so the loop ends after dim Mov(w) steps.

    A chain, when given, lists nested subspaces from Fix(w) up to the whole
    space with codimension dropping by one at each step; the intermediate
    products then fix exactly those subspaces.
    """
    if not is_elliptic(w):
        raise ValueError("factor_elliptic needs an elliptic isometry")
    if chain is not None:
        return _factor_elliptic_chain(w, list(chain))
    factors = []
    current = w
    while not current.is_identity():
        r = motion_reflection(current, _first_unfixed_point(current))
        factors.append(r)
        current = r.to_isometry().compose(current)
    return Factorization(target=w, factors=tuple(factors))


def _factor_elliptic_chain(
    w: Isometry, chain: list[AffineSubspaceE]
) -> Factorization:
    fixed = min_set(w)
    k = fixed.codim
    if len(chain) != k + 1:
        raise ChainError(f"chain must have {k + 1} subspaces, got {len(chain)}")
    if chain[0] != fixed:
        raise ChainError("chain must start at the fixed set of w")
    for i, b in enumerate(chain):
        if b.codim != k - i:
            raise ChainError(
                f"chain entry {i} has codimension {b.codim}, wanted {k - i}"
            )
        if i > 0 and not chain[i - 1].subset_of(b):
            raise ChainError("chain subspaces are not nested")
    factors = []
    current = w
    for i in range(1, len(chain)):
        x = _first_point_outside(chain[i], chain[i - 1])
        r = motion_reflection(current, x)
        factors.append(r)
        current = r.to_isometry().compose(current)
        if min_set(current) != chain[i]:
            raise ChainError("chain step did not land on the requested fixed set")
    return Factorization(target=w, factors=tuple(factors))


def factor_hyperbolic(w: Isometry) -> Factorization:
    """Minimal factorization of a hyperbolic isometry.

    Splits w = t_mu u, realizes the translation as two reflections across
    parallel mirrors normal to mu (through the canonical min-set point and
    its mu/2 translate), and factors the elliptic part.
    """
    mu, u = standard_splitting(w)
    if mu.is_zero():
        raise ValueError("factor_hyperbolic needs a hyperbolic isometry")
    anchor = min_set(w).point
    mirror_dir = orthogonal_complement(span([mu]))
    far = Reflection(
        AffineSubspaceE(anchor + mu.scale(Fraction(1, 2)), mirror_dir), mu
    )
    near = Reflection(AffineSubspaceE(anchor, mirror_dir), mu)
    rest = factor_elliptic(u)
    return Factorization(target=w, factors=(far, near) + rest.factors)


def factor(w: Isometry) -> Factorization:
    """Minimal factorization of any isometry."""
    if is_elliptic(w):
        return factor_elliptic(w)
    return factor_hyperbolic(w)


def _step_to_hyperbolic(current: Isometry, target_move: AffineSubspaceV) -> Reflection:
    """Reflection taking a hyperbolic isometry one step down to h^{target}.

    The points whose motion under the current isometry lies in the smaller
    move-set form an affine hyperplane.  Multiplying the reflection on the
    left means the mirror must contain the images of those points, so the
    preimage hyperplane is pushed forward through the isometry.
    """
    n = current.dim
    difference = current.matrix - Matrix.identity(n)
    normals = orthogonal_complement(target_move.direction)
    rows = [
        (Matrix([normal.coords], ncols=n) * difference).rows[0]
        for normal in normals.basis
    ]
    rhs = Vector(
        normal.dot(target_move.mu - current.translation) for normal in normals.basis
    )
    solution = solve_affine(Matrix(rows, ncols=n), rhs)
    if solution is None:
        raise ChainError("requested move-set is not reached by any point")
    particular, kernel = solution
    preimage = AffineSubspaceE(Point(particular), kernel)
    if preimage.codim != 1:
        raise ChainError("move-set step does not cut out a hyperplane")
    return Reflection(current.image_of_affine(preimage))


def chain_to_factorization(
    chain: Sequence[PosetElement], w: Isometry
) -> Factorization:
    """Factorization whose suffix invariants walk the given maximal chain.

    The chain is consumed in descending order: inv(w) first, the bottom
    element (the full space, elliptic) last.  Each consecutive pair must be
    a covering relation.
    """
    chain = list(chain)
    if not chain:
        raise ChainError("empty chain")
    if chain[0] != inv_map(w):
        raise ChainError("chain must start at the invariant of w")
    if chain[-1] != Elliptic(AffineSubspaceE.full(w.dim)):
        raise ChainError("chain must end at the full-space element")
    for above, below in zip(chain, chain[1:]):
        if not isinstance(above, (Elliptic, Hyperbolic)) or not isinstance(
            below, (Elliptic, Hyperbolic)
        ):
            raise ChainError("chains contain only elliptic and hyperbolic elements")
        if not leq(below, above):
            raise ChainError("chain entries are not descending")
        if rank(above) - rank(below) != 1:
            raise ChainError("chain is not maximal: rank must drop by one")
    factors = []
    current = w
    for above, below in zip(chain, chain[1:]):
        if isinstance(below, Hyperbolic):
            r = _step_to_hyperbolic(current, below.move)
        elif isinstance(above, Hyperbolic):
            r = motion_reflection(current, below.fix.point)
        else:
            x = _first_point_outside(below.fix, above.fix)
            r = motion_reflection(current, x)
        factors.append(r)
        current = r.to_isometry().compose(current)
        if inv_map(current) != below:
            raise ChainError("chain step did not land on the requested element")
    if not current.is_identity():
        raise ChainError("chain did not reduce w to the identity")
    return Factorization(target=w, factors=tuple(factors))


def factorization_to_chain(f: Factorization) -> list[PosetElement]:
    """Invariants of the suffixes of a minimal factorization.

    The result is a maximal chain from inv(target) down to the full-space
    element; a factorization whose suffix ranks do not drop by exactly one
    at each step is rejected as non-minimal.
    """
    if not f.is_exact():
        raise ChainError("factors do not multiply to the target")
    suffix = Isometry.identity(f.target.dim)
    elements = [inv_map(suffix)]
    for r in reversed(f.factors):
        suffix = r.to_isometry().compose(suffix)
        elements.append(inv_map(suffix))
    elements.reverse()
    for above, below in zip(elements, elements[1:]):
        if rank(above) - rank(below) != 1 or not leq(below, above):
            raise ChainError(
                "factorization is not minimal: suffix ranks must step by one"
            )
    return elements


def rewrite_shift(
    f: Factorization, positions: Sequence[int], to_front: bool = True
) -> Factorization:
    """Move selected factors, unchanged and in order, to the front or back.

    Each swap past an unselected neighbor replaces the neighbor by its
    conjugate under the moving reflection, which preserves the product and
    the length.
    """
    k = len(f.factors)
    selected = set(positions)
    if len(selected) != len(list(positions)):
        raise IndexError("positions must be distinct")
    for p in selected:
        if not 0 <= p < k:
            raise IndexError(f"position {p} out of range for {k} factors")
    work: list[tuple[Reflection, bool]] = [
        (r, i in selected) for i, r in enumerate(f.factors)
    ]
    if to_front:
        target_slot = 0
        for i in range(k):
            if not work[i][1]:
                continue
            j = i
            while j > target_slot:
                mover = work[j][0]
                neighbor = work[j - 1][0]
                conjugated = neighbor.conjugate(mover.to_isometry())
                work[j - 1], work[j] = (mover, True), (conjugated, False)
                j -= 1
            target_slot += 1
    else:
        target_slot = k - 1
        for i in range(k - 1, -1, -1):
            if not work[i][1]:
                continue
            j = i
            while j < target_slot:
                mover = work[j][0]
                neighbor = work[j + 1][0]
                conjugated = neighbor.conjugate(mover.to_isometry())
                work[j], work[j + 1] = (conjugated, False), (mover, True)
                j += 1
            target_slot -= 1
    return Factorization(target=f.target, factors=tuple(r for r, _ in work))


def verify_minimal(f: Factorization) -> bool:
    """Exact product, Scherk length, and independent roots when elliptic."""
    if not f.is_exact():
        return False
    if len(f.factors) != reflection_length(f.target):
        return False
    if is_elliptic(f.target) and f.factors:
        roots = span([r.root for r in f.factors], ambient=f.target.dim)
        if roots.dim != len(f.factors):
            return False
    return True
