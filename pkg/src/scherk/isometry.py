"""Euclidean isometries with exact rational coordinates.

An isometry is stored as a pair (A, b) with A an exactly orthogonal rational
matrix and b a rational vector, acting on coordinates as x -> A x + b.  The
coordinates refer to the global basepoint fixed in :mod:`scherk.affine`, and
composition is function composition: (w1 * w2)(x) = w1(w2(x)).

Two subsets control everything else in this library:

* the move-set Mov(w), the affine subspace of V consisting of all motion
  vectors w(x) - x, stored in standard form U + mu, and
* the min-set Min(w), the affine subspace of E of points moved by exactly
  mu, which are the points moved the least.

An isometry is *elliptic* when it fixes a point, equivalently when mu = 0,
in which case Min(w) is the fixed-point set.  Otherwise it is *hyperbolic*.
Scherk's formula gives the minimal number of reflections multiplying to w
directly from these invariants: dim Mov(w) when w is elliptic and
dim Mov(w) + 2 when w is hyperbolic.  No search is ever performed.

Reflections are represented by their mirror, an affine hyperplane of E,
together with an unnormalized integer root spanning the normal line.  Roots
stay rational because every formula divides by the root's squared length,
so nothing here ever needs a square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .affine import AffineSubspaceE, AffineSubspaceV, Point
from .linalg import (
    DimensionError,
    Matrix,
    Vector,
    column_space,
    orthogonal_complement,
    solve_affine,
    span,
    subspace_sum,
)

ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"


class OrthogonalityError(ValueError):
    """The linear part of an isometry is not exactly orthogonal."""


class Isometry:
    """A euclidean isometry x -> A x + b with A exactly orthogonal.

    Orthogonality is verified whenever an isometry is built from raw data.
    Group operations (compose, inverse) skip the check: products and
    inverses of exactly orthogonal rational matrices are exactly orthogonal,
    so revalidating them would only slow the hot paths down.
    """

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix: Matrix, translation: Vector, _trusted: bool = False):
        if matrix.nrows != matrix.ncols:
            raise OrthogonalityError("linear part must be square")
        if matrix.nrows != translation.dim:
            raise DimensionError("matrix and translation of different dimensions")
        if not _trusted and not matrix.is_orthogonal():
            raise OrthogonalityError("linear part is not orthogonal")
        self.matrix = matrix
        self.translation = translation

    @classmethod
    def identity(cls, dim: int) -> "Isometry":
        return cls(Matrix.identity(dim), Vector.zero(dim), _trusted=True)

    @property
    def dim(self) -> int:
        return self.translation.dim

    def apply(self, x: Point) -> Point:
        return Point(self.matrix * x.to_vector() + self.translation)

    def apply_vector(self, v: Vector) -> Vector:
        """Action on displacement vectors (the linear part only)."""
        return self.matrix * v

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if self.dim != other.dim:
            raise DimensionError("isometries of different dimensions")
        return Isometry(
            self.matrix * other.matrix,
            self.matrix * other.translation + self.translation,
            _trusted=True,
        )

    def __mul__(self, other):
        if isinstance(other, Isometry):
            return self.compose(other)
        return NotImplemented

    def inverse(self) -> "Isometry":
        at = self.matrix.transpose()
        return Isometry(at, -(at * self.translation), _trusted=True)

    def is_identity(self) -> bool:
        return self.translation.is_zero() and self.matrix == Matrix.identity(self.dim)

    def image_of_affine(self, b: AffineSubspaceE) -> AffineSubspaceE:
        direction = span(
            [self.matrix * d for d in b.direction.basis], ambient=self.dim
        )
        return AffineSubspaceE(self.apply(b.point), direction)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Isometry)
            and self.matrix == other.matrix
            and self.translation == other.translation
        )

    def __hash__(self) -> int:
        return hash((self.matrix, self.translation))

    def __repr__(self) -> str:
        return f"Isometry({self.matrix!r}, {self.translation!r})"


def translation(shift: Vector) -> Isometry:
    """The translation x -> x + shift."""
    return Isometry(Matrix.identity(shift.dim), shift, _trusted=True)


def _canonical_root(direction: Vector) -> Vector:
    """Scale a normal vector to a primitive integer vector, leading entry > 0."""
    if direction.is_zero():
        raise ValueError("root must be nonzero")
    common = math.lcm(*(c.denominator for c in direction.coords))
    ints = [int(c * common) for c in direction.coords]
    g = math.gcd(*ints)
    ints = [value // g for value in ints]
    lead = next(value for value in ints if value != 0)
    if lead < 0:
        ints = [-value for value in ints]
    return Vector(ints)


class Reflection:
    """The unique nontrivial isometry fixing an affine hyperplane pointwise.

    Determined entirely by its mirror; the stored root is the canonical
    primitive integer normal, so equal reflections compare equal.
    """

    __slots__ = ("mirror", "root", "_iso")

    def __init__(self, mirror: AffineSubspaceE, root: Optional[Vector] = None):
        if mirror.codim != 1:
            raise ValueError(
                f"mirror must have codimension 1, got codimension {mirror.codim}"
            )
        normal_line = orthogonal_complement(mirror.direction)
        if root is None:
            root = normal_line.basis[0]
        elif not normal_line.contains(root) or root.is_zero():
            raise ValueError("root must span the normal line of the mirror")
        self.mirror = mirror
        self.root = _canonical_root(root)
        self._iso: Optional[Isometry] = None

    @property
    def dim(self) -> int:
        return self.mirror.ambient

    def to_isometry(self) -> Isometry:
        if self._iso is None:
            alpha = self.root
            scale = alpha.norm_sq()
            n = self.dim
            rows = []
            for i in range(n):
                rows.append(
                    [
                        (Fraction(1) if i == j else Fraction(0))
                        - 2 * alpha[i] * alpha[j] / scale
                        for j in range(n)
                    ]
                )
            shift = alpha.scale(2 * self.mirror.point.to_vector().dot(alpha) / scale)
            self._iso = Isometry(Matrix(rows), shift, _trusted=True)
        return self._iso

    def apply(self, x: Point) -> Point:
        alpha = self.root
        factor = 2 * (x - self.mirror.point).dot(alpha) / alpha.norm_sq()
        return x - alpha.scale(factor)

    def conjugate(self, g: Isometry) -> "Reflection":
        """The reflection g r g^{-1}, whose mirror is the image of this mirror."""
        return Reflection(g.image_of_affine(self.mirror), g.apply_vector(self.root))

    def __eq__(self, other) -> bool:
        return isinstance(other, Reflection) and self.mirror == other.mirror

    def __hash__(self) -> int:
        return hash(("Reflection", self.mirror))

    def __repr__(self) -> str:
        return f"Reflection(mirror={self.mirror!r}, root={self.root!r})"


def make_reflection(mirror: AffineSubspaceE) -> Reflection:
    """Reflection across an affine hyperplane of E."""
    return Reflection(mirror)


def reflection_bisecting(x: Point, y: Point) -> Reflection:
    """The unique reflection swapping two distinct points.

    Its mirror is the perpendicular bisector: the hyperplane through the
    midpoint normal to y - x.  Symmetric in its arguments.
    """
    alpha = y - x
    if alpha.is_zero():
        raise ValueError("bisecting reflection needs two distinct points")
    midpoint = x + alpha.scale(Fraction(1, 2))
    mirror = AffineSubspaceE(midpoint, orthogonal_complement(span([alpha])))
    return Reflection(mirror, alpha)


@dataclass(frozen=True)
class IsometryClass:
    """Bundle of the basic invariants of an isometry.

    tag is "elliptic" or "hyperbolic"; move_set is in standard form U + mu;
    min_set is the fixed set when elliptic; length is the reflection length
    from Scherk's formula.
    """

    tag: str
    move_set: AffineSubspaceV
    min_set: AffineSubspaceE
    length: int

    @property
    def is_elliptic(self) -> bool:
        return self.tag == ELLIPTIC


def move_set(w: Isometry) -> AffineSubspaceV:
    """All motion vectors w(x) - x, in standard form U + mu.

    U is the column space of A - I and mu is the component of b orthogonal
    to it.
    """
    difference = w.matrix - Matrix.identity(w.dim)
    u = column_space(difference)
    return AffineSubspaceV(u, w.translation)


def min_set(w: Isometry) -> AffineSubspaceE:
    """Points moved by exactly mu, the minimal motion.

    Solves (A - I) x = mu - b, which is consistent by the choice of mu; the
    result has dimension complementary to the move-set and is stabilized by
    w.
    """
    difference = w.matrix - Matrix.identity(w.dim)
    mu = move_set(w).mu
    solution = solve_affine(difference, mu - w.translation)
    assert solution is not None, "min-set system must be consistent"
    particular, kernel = solution
    return AffineSubspaceE(Point(particular), kernel)


def classify(w: Isometry) -> IsometryClass:
    mov = move_set(w)
    tag = ELLIPTIC if mov.is_linear() else HYPERBOLIC
    length = mov.dim + (0 if tag == ELLIPTIC else 2)
    return IsometryClass(tag=tag, move_set=mov, min_set=min_set(w), length=length)


def reflection_length(w: Isometry) -> int:
    """Minimal number of reflections multiplying to w (Scherk's formula)."""
    mov = move_set(w)
    return mov.dim + (0 if mov.is_linear() else 2)


def is_elliptic(w: Isometry) -> bool:
    return move_set(w).is_linear()


def standard_splitting(w: Isometry) -> tuple[Vector, Isometry]:
    """Write w = t_mu u with u elliptic.

    mu is the standard-form shift of the move-set; u fixes exactly the
    min-set of w and has Mov(u) = Dir(Mov(w)).  For elliptic w this is
    (0, w).
    """
    mu = move_set(w).mu
    u = Isometry(w.matrix, w.translation - mu, _trusted=True)
    return mu, u


@dataclass(frozen=True)
class ProductPrediction:
    """Predicted class of r*w from the invariants of r and w alone.

    move_set is the exact move-set of r*w when the case determines it (the
    root is outside the move-set direction).  When the root lies inside,
    the move-set is only constrained to be a codimension 1 subspace of
    move_set_within, and move_set is None.
    """

    tag: str
    length: int
    move_set: Optional[AffineSubspaceV]
    move_set_within: Optional[AffineSubspaceV]


def predict_product(r: Reflection, w: Isometry) -> ProductPrediction:
    """Class and length of r*w without computing the product.

    Case analysis on whether the root lies in the move-set direction, and
    for elliptic w on whether the mirror contains the fixed set.
    """
    cls = classify(w)
    alpha = r.root
    u = cls.move_set.direction
    k = cls.length
    if cls.tag == HYPERBOLIC:
        if u.contains(alpha):
            return ProductPrediction(HYPERBOLIC, k - 1, None, cls.move_set)
        u_alpha = subspace_sum(u, span([alpha]))
        enlarged = AffineSubspaceV(u_alpha, cls.move_set.mu)
        if enlarged.is_linear():
            return ProductPrediction(ELLIPTIC, k - 1, enlarged, None)
        return ProductPrediction(HYPERBOLIC, k + 1, enlarged, None)
    if not u.contains(alpha):
        u_alpha = subspace_sum(u, span([alpha]))
        grown = AffineSubspaceV(u_alpha, Vector.zero(w.dim))
        return ProductPrediction(ELLIPTIC, k + 1, grown, None)
    if cls.min_set.subset_of(r.mirror):
        return ProductPrediction(ELLIPTIC, k - 1, None, cls.move_set)
    return ProductPrediction(HYPERBOLIC, k + 1, None, cls.move_set)


def motion_reflection(w: Isometry, x: Point) -> Reflection:
    """The unique reflection sending x to w(x); requires w(x) != x.

    Always occurs in some minimal length reflection factorization of w, so
    multiplying by it shortens w.
    """
    y = w.apply(x)
    if y == x:
        raise ValueError("motion reflection needs a point not fixed by w")
    return reflection_bisecting(x, y)


def is_reflection_below(r: Reflection, w: Isometry) -> bool:
    """Whether r occurs in some minimal factorization, i.e. shortens w."""
    return reflection_length(r.to_isometry().compose(w)) < reflection_length(w)


def interval_contains(w: Isometry, u: Isometry) -> bool:
    """Whether u lies between the identity and w in the reflection metric."""
    return reflection_length(u) + reflection_length(u.inverse().compose(w)) == (
        reflection_length(w)
    )


def interval_leq(w: Isometry, u: Isometry, u2: Isometry) -> bool:
    """The interval order: u below u2 on a common geodesic from 1 to w."""
    total = (
        reflection_length(u)
        + reflection_length(u.inverse().compose(u2))
        + reflection_length(u2.inverse().compose(w))
    )
    return total == reflection_length(w)
