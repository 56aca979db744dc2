"""Points versus vectors, and affine subspaces of both spaces.

The point space and its vector space are kept apart in the type system:
point - point is a Vector, point + vector is a Point, and point + point is
a TypeError.  Internally a single global basepoint identifies the two, so
all computations stay concrete coordinate work, but code built on these
types cannot accidentally treat a position as a displacement.

Both kinds of affine subspace carry a canonical representation that makes
equality componentwise:

* ``AffineSubspaceV`` is U + mu in standard form, i.e. mu is the unique
  shift vector orthogonal to the direction subspace U.
* ``AffineSubspaceE`` stores its direction space D together with the unique
  point of the subspace whose coordinate vector lies in the orthogonal
  complement of D.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .linalg import (
    DimensionError,
    LinearSubspace,
    Matrix,
    Vector,
    orthogonal_complement,
    project,
    solve_affine,
    span,
    subspace_sum,
)


class Point:
    """A position in the affine point space; not a vector."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        self.coords = Vector(coords).coords

    @classmethod
    def origin(cls, dim: int) -> "Point":
        return cls(Vector.zero(dim))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def to_vector(self) -> Vector:
        """Coordinate vector relative to the global basepoint."""
        return Vector(self.coords)

    def __add__(self, other):
        if isinstance(other, Vector):
            return Point(a + b for a, b in zip(self.coords, other.coords))
        if isinstance(other, Point):
            raise TypeError("cannot add two points; subtract them to get a vector")
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Point):
            if len(self.coords) != len(other.coords):
                raise DimensionError("points of different dimensions")
            return Vector(a - b for a, b in zip(self.coords, other.coords))
        if isinstance(other, Vector):
            return Point(a - b for a, b in zip(self.coords, other.coords))
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(("Point", self.coords))

    def __repr__(self) -> str:
        return "Point((%s))" % ", ".join(str(c) for c in self.coords)


class AffineSubspaceV:
    """An affine subspace U + mu of the vector space, in standard form.

    The constructor accepts any shift and subtracts its projection onto U,
    so the stored mu always lies in the orthogonal complement of U and the
    representation is unique.  The subspace is linear iff mu is zero.
    """

    __slots__ = ("direction", "mu")

    def __init__(self, direction: LinearSubspace, shift: Vector) -> None:
        if shift.dim != direction.ambient:
            raise DimensionError("shift and direction of different dimensions")
        self.direction = direction
        self.mu = shift - project(shift, direction)

    @property
    def ambient(self) -> int:
        return self.direction.ambient

    @property
    def dim(self) -> int:
        return self.direction.dim

    def is_linear(self) -> bool:
        return self.mu.is_zero()

    def contains(self, v: Vector) -> bool:
        return self.direction.contains(v - self.mu)

    def subset_of(self, other: "AffineSubspaceV") -> bool:
        if self.ambient != other.ambient:
            raise DimensionError("affine subspaces of different ambient dimensions")
        return self.direction.subset_of(other.direction) and other.contains(self.mu)

    def linear_span(self) -> LinearSubspace:
        """Span of the subspace viewed as a set of vectors.

        For a nonlinear subspace this is one dimension larger than the
        direction space, since mu is independent of it.
        """
        if self.mu.is_zero():
            return self.direction
        return subspace_sum(self.direction, span([self.mu]))

    def translate(self, v: Vector) -> "AffineSubspaceV":
        return AffineSubspaceV(self.direction, self.mu + v)

    def points(self) -> list[Vector]:
        """mu together with its translates by the basis, spanning the subspace."""
        return [self.mu] + [self.mu + b for b in self.direction.basis]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AffineSubspaceV)
            and self.direction == other.direction
            and self.mu == other.mu
        )

    def __hash__(self) -> int:
        return hash((self.direction, self.mu))

    def __repr__(self) -> str:
        return f"AffineSubspaceV({self.direction!r} + {self.mu!r})"


class AffineSubspaceE:
    """A nonempty affine subspace of the point space.

    Canonical form: the stored point is the unique one whose coordinate
    vector is orthogonal to the direction space, so equality is equality of
    the two fields.  The empty set is never an AffineSubspaceE; operations
    that can produce it return None instead.
    """

    __slots__ = ("point", "direction")

    def __init__(self, point: Point, direction: LinearSubspace) -> None:
        if point.dim != direction.ambient:
            raise DimensionError("point and direction of different dimensions")
        position = point.to_vector()
        self.point = Point(position - project(position, direction))
        self.direction = direction

    @classmethod
    def single_point(cls, point: Point) -> "AffineSubspaceE":
        return cls(point, LinearSubspace.zero(point.dim))

    @classmethod
    def full(cls, dim: int) -> "AffineSubspaceE":
        return cls(Point.origin(dim), LinearSubspace.full(dim))

    @property
    def ambient(self) -> int:
        return self.direction.ambient

    @property
    def dim(self) -> int:
        return self.direction.dim

    @property
    def codim(self) -> int:
        return self.direction.codim

    def is_full(self) -> bool:
        return self.direction.is_full()

    def contains(self, x: Point) -> bool:
        if x.dim != self.ambient:
            raise DimensionError("point of wrong dimension")
        return self.direction.contains(x - self.point)

    def subset_of(self, other: "AffineSubspaceE") -> bool:
        if self.ambient != other.ambient:
            raise DimensionError("affine subspaces of different ambient dimensions")
        return self.direction.subset_of(other.direction) and other.contains(self.point)

    def points(self) -> list[Point]:
        """The canonical point and its basis translates, spanning the subspace."""
        return [self.point] + [self.point + b for b in self.direction.basis]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AffineSubspaceE)
            and self.point == other.point
            and self.direction == other.direction
        )

    def __hash__(self) -> int:
        return hash((self.point, self.direction))

    def __repr__(self) -> str:
        return f"AffineSubspaceE({self.point!r} + {self.direction!r})"


def standard_form(direction: LinearSubspace, shift: Vector) -> AffineSubspaceV:
    """The affine subspace direction + shift, with the shift minimized."""
    return AffineSubspaceV(direction, shift)


def affine_hull(points: Sequence[Point]) -> AffineSubspaceE:
    """Smallest affine subspace containing the given points."""
    if not points:
        raise ValueError("affine hull of an empty point list")
    dims = {p.dim for p in points}
    if len(dims) != 1:
        raise DimensionError(f"points of mixed dimensions: {sorted(dims)}")
    base = points[0]
    direction = span([p - base for p in points[1:]], ambient=base.dim)
    return AffineSubspaceE(base, direction)


def hull_of_affine_e(subspaces: Sequence[AffineSubspaceE]) -> AffineSubspaceE:
    """Smallest affine subspace containing every one of the given subspaces."""
    if not subspaces:
        raise ValueError("hull of an empty list of subspaces")
    base = subspaces[0].point
    vectors = []
    for b in subspaces:
        vectors.append(b.point - base)
        vectors.extend(b.direction.basis)
    return AffineSubspaceE(base, span(vectors, ambient=base.dim))


def hull_of_affine_v(subspaces: Sequence[AffineSubspaceV]) -> AffineSubspaceV:
    """Smallest affine subspace of V containing every one of the given ones."""
    if not subspaces:
        raise ValueError("hull of an empty list of subspaces")
    base = subspaces[0].mu
    vectors = []
    for m in subspaces:
        vectors.append(m.mu - base)
        vectors.extend(m.direction.basis)
    return AffineSubspaceV(span(vectors, ambient=base.dim), base)


def extend_affine_e(b: AffineSubspaceE, extra: LinearSubspace) -> AffineSubspaceE:
    """The subspace b + extra, i.e. b thickened by additional directions."""
    return AffineSubspaceE(b.point, subspace_sum(b.direction, extra))


def extend_affine_v(m: AffineSubspaceV, extra: LinearSubspace) -> AffineSubspaceV:
    return AffineSubspaceV(subspace_sum(m.direction, extra), m.mu)


def _intersect_by_constraints(
    ambient: int,
    pairs: Sequence[tuple[LinearSubspace, Vector]],
):
    """Common solutions of 'x - anchor lies in direction' for each pair."""
    constraint_rows = []
    rhs = []
    for direction, anchor in pairs:
        normals = orthogonal_complement(direction)
        for row in normals.basis:
            constraint_rows.append(row.coords)
            rhs.append(row.dot(anchor))
    a = Matrix(constraint_rows, ncols=ambient)
    return solve_affine(a, Vector(rhs))


def intersect_affine(
    b1: AffineSubspaceE, b2: AffineSubspaceE
) -> Optional[AffineSubspaceE]:
    """Intersection of two affine subspaces of E; None when disjoint."""
    if b1.ambient != b2.ambient:
        raise DimensionError("affine subspaces of different ambient dimensions")
    solution = _intersect_by_constraints(
        b1.ambient,
        [
            (b1.direction, b1.point.to_vector()),
            (b2.direction, b2.point.to_vector()),
        ],
    )
    if solution is None:
        return None
    particular, kernel = solution
    return AffineSubspaceE(Point(particular), kernel)


def intersect_affine_v(
    m1: AffineSubspaceV, m2: AffineSubspaceV
) -> Optional[AffineSubspaceV]:
    """Intersection of two affine subspaces of V; None when disjoint."""
    if m1.ambient != m2.ambient:
        raise DimensionError("affine subspaces of different ambient dimensions")
    solution = _intersect_by_constraints(
        m1.ambient, [(m1.direction, m1.mu), (m2.direction, m2.mu)]
    )
    if solution is None:
        return None
    particular, kernel = solution
    return AffineSubspaceV(kernel, particular)


def intersect_many_affine_v(
    subspaces: Sequence[AffineSubspaceV],
) -> Optional[AffineSubspaceV]:
    if not subspaces:
        raise ValueError("intersection of an empty list of subspaces")
    result = subspaces[0]
    for m in subspaces[1:]:
        result = intersect_affine_v(result, m)
        if result is None:
            return None
    return result
