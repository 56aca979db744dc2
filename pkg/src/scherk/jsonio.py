"""JSON encodings for every value the library exchanges.

Rationals travel as strings "p/q" (or "p" when the denominator is 1),
vectors as arrays of such strings, subspaces as {"dim_ambient": n,
"basis": [[...], ...]} with the basis rows in reduced row echelon form.
Floats are rejected: an exact library must not accept approximations.

Isometries are accepted in two shapes: {"dim", "matrix", "translation"}
or {"reflections": [{"root": [...], "point": [...]}, ...]} where the
listed reflections multiply left to right, the first one acting last.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .affine import AffineSubspaceE, AffineSubspaceV, Point
from .isometry import Isometry, Matrix, Reflection
from .linalg import LinearSubspace, Vector
from .factor import Factorization
from .poset import BoundFamily, Elliptic, Hyperbolic, New, PosetElement


class FormatError(ValueError):
    """Structurally invalid JSON payload."""


def scalar_to_json(x: Fraction) -> str:
    return str(x)


def scalar_from_json(obj: Any) -> Fraction:
    if isinstance(obj, bool):
        raise FormatError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {obj!r}: {exc}") from exc
    raise FormatError(f"not a rational: {obj!r}")


def vector_to_json(v: Vector) -> list[str]:
    return [scalar_to_json(c) for c in v.coords]


def vector_from_json(obj: Any) -> Vector:
    if not isinstance(obj, list):
        raise FormatError(f"vector must be an array, got {obj!r}")
    return Vector(scalar_from_json(x) for x in obj)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[scalar_to_json(x) for x in row] for row in m.rows]


def matrix_from_json(obj: Any) -> Matrix:
    if not isinstance(obj, list) or not obj:
        raise FormatError("matrix must be a nonempty array of rows")
    rows = [vector_from_json(row).coords for row in obj]
    return Matrix(rows)


def subspace_to_json(u: LinearSubspace) -> dict:
    return {
        "dim_ambient": u.ambient,
        "basis": [vector_to_json(b) for b in u.basis],
    }


def subspace_from_json(obj: Any) -> LinearSubspace:
    if not isinstance(obj, dict) or "dim_ambient" not in obj or "basis" not in obj:
        raise FormatError("subspace needs dim_ambient and basis")
    ambient = obj["dim_ambient"]
    if not isinstance(ambient, int) or ambient < 1:
        raise FormatError(f"bad ambient dimension {ambient!r}")
    rows = [vector_from_json(row).coords for row in obj["basis"]]
    return LinearSubspace(ambient, rows)


def affine_v_to_json(m: AffineSubspaceV) -> dict:
    return {
        "kind": "affineV",
        "U": subspace_to_json(m.direction),
        "mu": vector_to_json(m.mu),
    }


def affine_v_from_json(obj: Any) -> AffineSubspaceV:
    if not isinstance(obj, dict) or "U" not in obj or "mu" not in obj:
        raise FormatError("affine subspace of V needs U and mu")
    return AffineSubspaceV(subspace_from_json(obj["U"]), vector_from_json(obj["mu"]))


def affine_e_to_json(b: AffineSubspaceE) -> dict:
    return {
        "kind": "affineE",
        "point": vector_to_json(b.point.to_vector()),
        "direction": subspace_to_json(b.direction),
    }


def affine_e_from_json(obj: Any) -> AffineSubspaceE:
    if not isinstance(obj, dict) or "point" not in obj or "direction" not in obj:
        raise FormatError("affine subspace of E needs point and direction")
    return AffineSubspaceE(
        Point(vector_from_json(obj["point"]).coords),
        subspace_from_json(obj["direction"]),
    )


def reflection_to_json(r: Reflection) -> dict:
    return {
        "root": vector_to_json(r.root),
        "point": vector_to_json(r.mirror.point.to_vector()),
    }


def reflection_from_json(obj: Any) -> Reflection:
    if not isinstance(obj, dict) or "root" not in obj or "point" not in obj:
        raise FormatError("reflection needs root and point")
    root = vector_from_json(obj["root"])
    anchor = Point(vector_from_json(obj["point"]).coords)
    if root.is_zero():
        raise FormatError("reflection root must be nonzero")
    from .linalg import orthogonal_complement, span

    mirror = AffineSubspaceE(anchor, orthogonal_complement(span([root])))
    return Reflection(mirror, root)


def isometry_to_json(w: Isometry) -> dict:
    return {
        "dim": w.dim,
        "matrix": matrix_to_json(w.matrix),
        "translation": vector_to_json(w.translation),
    }


def isometry_from_json(obj: Any) -> Isometry:
    if not isinstance(obj, dict):
        raise FormatError("isometry must be an object")
    if "reflections" in obj:
        entries = obj["reflections"]
        if not isinstance(entries, list):
            raise FormatError("reflections must be an array")
        reflections = [reflection_from_json(e) for e in entries]
        dims = {r.dim for r in reflections}
        if "dim" in obj:
            dims.add(obj["dim"])
        if len(dims) > 1:
            raise FormatError(f"mixed dimensions in reflections: {sorted(dims)}")
        if not dims:
            raise FormatError("empty reflection list needs an explicit dim")
        dim = dims.pop()
        w = Isometry.identity(dim)
        for r in reflections:
            w = w.compose(r.to_isometry())
        return w
    if "matrix" not in obj or "translation" not in obj:
        raise FormatError("isometry needs matrix and translation (or reflections)")
    matrix = matrix_from_json(obj["matrix"])
    shift = vector_from_json(obj["translation"])
    if "dim" in obj and obj["dim"] != shift.dim:
        raise FormatError("declared dim does not match the translation")
    return Isometry(matrix, shift)


def factorization_to_json(f: Factorization) -> dict:
    return {
        "target": isometry_to_json(f.target),
        "factors": [reflection_to_json(r) for r in f.factors],
    }


def factorization_from_json(obj: Any) -> Factorization:
    if not isinstance(obj, dict) or "target" not in obj or "factors" not in obj:
        raise FormatError("factorization needs target and factors")
    target = isometry_from_json(obj["target"])
    factors = tuple(reflection_from_json(e) for e in obj["factors"])
    return Factorization(target=target, factors=factors)


def element_to_json(p: PosetElement) -> dict:
    if isinstance(p, Elliptic):
        return {
            "kind": "e",
            "point": vector_to_json(p.fix.point.to_vector()),
            "direction": subspace_to_json(p.fix.direction),
        }
    if isinstance(p, Hyperbolic):
        return {
            "kind": "h",
            "U": subspace_to_json(p.move.direction),
            "mu": vector_to_json(p.move.mu),
        }
    return {"kind": "n", "U": subspace_to_json(p.subspace)}


def element_from_json(obj: Any) -> PosetElement:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("poset element needs a kind")
    kind = obj["kind"]
    if kind == "e":
        return Elliptic(affine_e_from_json(obj))
    if kind == "h":
        return Hyperbolic(affine_v_from_json(obj))
    if kind == "n":
        if "U" not in obj:
            raise FormatError("new element needs U")
        return New(subspace_from_json(obj["U"]))
    raise FormatError(f"unknown element kind {kind!r}")


def family_to_json(f: BoundFamily) -> dict:
    payload = {
        "kind": "family",
        "member_kind": f.kind,
        "direction": subspace_to_json(f.direction),
    }
    if f.within is not None:
        payload["within"] = affine_v_to_json(f.within)
    return payload


def bound_to_json(result) -> Any:
    """Encode a meet/join outcome: an element, a family, or null."""
    if result is None:
        return None
    if isinstance(result, BoundFamily):
        return family_to_json(result)
    return element_to_json(result)
