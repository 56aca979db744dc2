"""Wire format round trips and validation."""

from fractions import Fraction

import pytest

from scherk.affine import AffineSubspaceE, AffineSubspaceV, Point
from scherk.factor import factor
from scherk.isometry import translation
from scherk.jsonio import (
    FormatError,
    affine_e_from_json,
    affine_e_to_json,
    affine_v_from_json,
    affine_v_to_json,
    element_from_json,
    element_to_json,
    factorization_from_json,
    factorization_to_json,
    isometry_from_json,
    isometry_to_json,
    scalar_from_json,
    scalar_to_json,
    subspace_from_json,
    subspace_to_json,
    vector_from_json,
    vector_to_json,
)
from scherk.linalg import Vector, span
from scherk.oracle import corpus
from scherk.poset import Elliptic, Hyperbolic, New, inv_map


def e(n, i):
    return Vector.basis(n, i)


class TestScalars:
    def test_integer_renders_bare(self):
        assert scalar_to_json(Fraction(3)) == "3"

    def test_fraction_renders_with_slash(self):
        assert scalar_to_json(Fraction(-2, 5)) == "-2/5"

    def test_parse_accepts_ints_and_strings(self):
        assert scalar_from_json(7) == Fraction(7)
        assert scalar_from_json("7/2") == Fraction(7, 2)

    def test_floats_rejected(self):
        with pytest.raises(FormatError):
            scalar_from_json(0.5)
        with pytest.raises(FormatError):
            scalar_from_json(True)

    def test_zero_denominator_rejected(self):
        with pytest.raises(FormatError):
            scalar_from_json("1/0")


class TestContainers:
    def test_vector_round_trip(self):
        v = Vector([Fraction(1, 2), Fraction(-3), Fraction(0)])
        assert vector_from_json(vector_to_json(v)) == v

    def test_subspace_round_trip_basis_is_rref(self):
        u = span([Vector([2, 2, 0]), Vector([0, 0, 3])])
        payload = subspace_to_json(u)
        assert payload["basis"] == [["1", "1", "0"], ["0", "0", "1"]]
        assert subspace_from_json(payload) == u

    def test_affine_round_trips(self):
        m = AffineSubspaceV(span([e(2, 1)]), Vector([1, 1]))
        assert affine_v_from_json(affine_v_to_json(m)) == m
        b = AffineSubspaceE(Point([3, 5]), span([e(2, 0)]))
        assert affine_e_from_json(affine_e_to_json(b)) == b


class TestIsometries:
    def test_matrix_form_round_trip(self):
        for w in corpus(3, 10, seed=2):
            assert isometry_from_json(isometry_to_json(w)) == w

    def test_reflection_list_form(self):
        payload = {
            "reflections": [
                {"root": ["1", "0"], "point": ["1", "0"]},
                {"root": ["1", "0"], "point": ["0", "0"]},
            ]
        }
        assert isometry_from_json(payload) == translation(Vector([2, 0]))

    def test_empty_reflection_list_needs_dim(self):
        with pytest.raises(FormatError):
            isometry_from_json({"reflections": []})
        assert isometry_from_json({"reflections": [], "dim": 3}).is_identity()

    def test_non_orthogonal_rejected_at_construction(self):
        from scherk.isometry import OrthogonalityError

        payload = {
            "dim": 2,
            "matrix": [["1", "0"], ["0", "2"]],
            "translation": ["0", "0"],
        }
        with pytest.raises(OrthogonalityError):
            isometry_from_json(payload)

    def test_factorization_round_trip(self):
        for w in corpus(2, 8, seed=3):
            f = factor(w)
            back = factorization_from_json(factorization_to_json(f))
            assert back.target == f.target
            assert back.factors == f.factors


class TestElements:
    def test_all_three_kinds_round_trip(self):
        elements = [
            Elliptic(AffineSubspaceE(Point([0, 0, 0]), span([e(3, 0)]))),
            Hyperbolic(AffineSubspaceV(span([e(3, 0)]), Vector([0, 0, 1]))),
            New(span([e(3, 0)])),
        ]
        for p in elements:
            assert element_from_json(element_to_json(p)) == p

    def test_unknown_kind_rejected(self):
        with pytest.raises(FormatError):
            element_from_json({"kind": "x"})

    def test_inv_map_of_corpus_round_trips(self):
        for w in corpus(3, 10, seed=4):
            p = inv_map(w)
            assert element_from_json(element_to_json(p)) == p
