"""Isometry algebra: invariants, classification, products with reflections."""

import random
from fractions import Fraction

import pytest

from scherk.affine import AffineSubspaceE, AffineSubspaceV, Point
from scherk.isometry import (
    ELLIPTIC,
    HYPERBOLIC,
    Isometry,
    OrthogonalityError,
    classify,
    interval_contains,
    interval_leq,
    is_reflection_below,
    make_reflection,
    min_set,
    motion_reflection,
    move_set,
    predict_product,
    reflection_bisecting,
    reflection_length,
    standard_splitting,
    translation,
)
from scherk.linalg import LinearSubspace, Matrix, Vector, orthogonal_complement, span
from scherk.oracle import corpus, random_reflection


def vec(*coords):
    return Vector(coords)


def pt(*coords):
    return Point(coords)


def e(n, i):
    return Vector.basis(n, i)


def mirror(point, normal):
    return AffineSubspaceE(point, orthogonal_complement(span([normal])))


def glide():
    return Isometry(Matrix([[1, 0], [0, -1]]), vec(1, 0))


def half_turn():
    return Isometry(Matrix([[-1, 0], [0, -1]]), vec(0, 0))


class TestConstruction:
    def test_non_orthogonal_matrix_rejected(self):
        with pytest.raises(OrthogonalityError):
            Isometry(Matrix([[1, 0], [0, 2]]), vec(0, 0))

    def test_group_axioms_on_random_products(self):
        rng = random.Random(5)
        for w in corpus(3, 40, rng):
            assert w.compose(w.inverse()).is_identity()
            assert w.inverse().compose(w).is_identity()
        a, b, c = corpus(2, 3, 99)
        assert a.compose(b).compose(c) == a.compose(b.compose(c))


class TestReflections:
    def test_reflect_across_x_axis(self):
        r = make_reflection(mirror(pt(0, 0), e(2, 1)))
        assert r.apply(pt(0, 1)) == pt(0, -1)
        assert r.to_isometry().apply(pt(0, 1)) == pt(0, -1)

    def test_reflect_across_shifted_line(self):
        r = make_reflection(mirror(pt(1, 0), e(2, 0)))
        assert r.apply(pt(0, 0)) == pt(2, 0)

    def test_translations_cancel(self):
        t = translation(vec(2, 0))
        back = translation(vec(-2, 0))
        assert t.compose(back).is_identity()

    def test_reflection_is_involution(self):
        rng = random.Random(31)
        for dim in (1, 2, 3, 4):
            for _ in range(20):
                r = random_reflection(dim, rng).to_isometry()
                assert r.compose(r).is_identity()

    def test_mirror_rejects_non_hyperplane(self):
        with pytest.raises(ValueError):
            make_reflection(AffineSubspaceE.single_point(pt(0, 0, 0)))


class TestBisectingReflection:
    def test_horizontal_bisector(self):
        r = reflection_bisecting(pt(0, 0), pt(2, 0))
        assert r.mirror == mirror(pt(1, 0), e(2, 0))
        assert r.apply(pt(0, 0)) == pt(2, 0)
        assert r.apply(pt(2, 0)) == pt(0, 0)

    def test_vertical_bisector(self):
        r = reflection_bisecting(pt(0, 0), pt(0, 2))
        assert r.mirror == mirror(pt(0, 1), e(2, 1))

    def test_symmetric_in_arguments(self):
        assert reflection_bisecting(pt(1, 3), pt(4, -1)) == reflection_bisecting(
            pt(4, -1), pt(1, 3)
        )

    def test_coincident_points_rejected(self):
        with pytest.raises(ValueError):
            reflection_bisecting(pt(1, 1), pt(1, 1))


class TestMoveSet:
    def test_identity_moves_nothing(self):
        m = move_set(Isometry.identity(2))
        assert m.dim == 0 and m.is_linear()

    def test_glide_move_set(self):
        m = move_set(glide())
        assert m.direction == span([e(2, 1)])
        assert m.mu == vec(1, 0)
        assert not m.is_linear()

    def test_half_turn_moves_everywhere(self):
        m = move_set(half_turn())
        assert m.direction == LinearSubspace.full(2)
        assert m.is_linear()


class TestMinSet:
    def test_reflection_min_set_is_mirror(self):
        h = mirror(pt(1, 0), e(2, 0))
        assert min_set(make_reflection(h).to_isometry()) == h

    def test_identity_min_set_is_everything(self):
        assert min_set(Isometry.identity(3)) == AffineSubspaceE.full(3)

    def test_glide_min_set_is_axis(self):
        assert min_set(glide()) == AffineSubspaceE(pt(0, 0), span([e(2, 0)]))


class TestClassify:
    def test_identity(self):
        cls = classify(Isometry.identity(2))
        assert cls.tag == ELLIPTIC and cls.length == 0

    def test_translation(self):
        cls = classify(translation(vec(2, 0)))
        assert cls.tag == HYPERBOLIC
        assert cls.move_set.dim == 0
        assert cls.length == 2

    def test_glide_and_half_turn(self):
        assert classify(glide()).length == 3
        assert classify(glide()).tag == HYPERBOLIC
        assert classify(half_turn()).length == 2
        assert classify(half_turn()).tag == ELLIPTIC


class TestStandardSplitting:
    def test_translation_splits_trivially(self):
        mu, u = standard_splitting(translation(vec(3, 1)))
        assert mu == vec(3, 1)
        assert u.is_identity()

    def test_glide_splits_into_shift_and_mirror(self):
        mu, u = standard_splitting(glide())
        assert mu == vec(1, 0)
        assert u == make_reflection(mirror(pt(0, 0), e(2, 1))).to_isometry()
        assert translation(mu).compose(u) == glide()

    def test_elliptic_splits_as_itself(self):
        mu, u = standard_splitting(half_turn())
        assert mu.is_zero()
        assert u == half_turn()

    def test_splitting_invariants_on_corpus(self):
        for dim in (1, 2, 3):
            for w in corpus(dim, 30, seed=dim):
                mu, u = standard_splitting(w)
                assert translation(mu).compose(u) == w
                ucls = classify(u)
                assert ucls.tag == ELLIPTIC
                assert ucls.move_set.direction == move_set(w).direction
                assert ucls.min_set == min_set(w)


class TestPredictProduct:
    def test_translation_killed_by_inner_mirror(self):
        w = translation(vec(2, 0))
        r = make_reflection(mirror(pt(1, 0), e(2, 0)))
        prediction = predict_product(r, w)
        assert (prediction.tag, prediction.length) == (ELLIPTIC, 1)
        product = r.to_isometry().compose(w)
        assert classify(product).length == 1

    def test_translation_grows_to_glide(self):
        w = translation(vec(2, 0))
        r = make_reflection(mirror(pt(0, 0), e(2, 1)))
        prediction = predict_product(r, w)
        assert (prediction.tag, prediction.length) == (HYPERBOLIC, 3)

    def test_half_turn_grows_to_glide(self):
        r = make_reflection(mirror(pt(0, 1), e(2, 1)))
        prediction = predict_product(r, half_turn())
        assert (prediction.tag, prediction.length) == (HYPERBOLIC, 3)
        product = r.to_isometry().compose(half_turn())
        assert product.apply(pt(0, 0)) == pt(0, 2)

    def test_agreement_with_direct_computation(self):
        rng = random.Random(71)
        for dim in (2, 3, 4):
            for w in corpus(dim, 60, rng):
                r = random_reflection(dim, rng)
                prediction = predict_product(r, w)
                actual = classify(r.to_isometry().compose(w))
                assert prediction.tag == actual.tag
                assert prediction.length == actual.length
                if prediction.move_set is not None:
                    assert prediction.move_set == actual.move_set
                else:
                    within = prediction.move_set_within
                    assert actual.move_set.subset_of(within)
                    assert actual.move_set.dim == within.dim - 1


class TestReflectionsBelow:
    def test_inner_mirror_is_below_translation(self):
        w = translation(vec(2, 0))
        r = make_reflection(mirror(pt(1, 0), e(2, 0)))
        assert is_reflection_below(r, w)

    def test_axis_mirror_is_not_below_translation(self):
        w = translation(vec(2, 0))
        r = make_reflection(mirror(pt(0, 0), e(2, 1)))
        assert not is_reflection_below(r, w)

    def test_motion_reflection_bisects(self):
        w = translation(vec(2, 0))
        r = motion_reflection(w, pt(0, 0))
        assert r == reflection_bisecting(pt(0, 0), pt(2, 0))
        assert is_reflection_below(r, w)

    def test_motion_reflection_rejects_fixed_points(self):
        r = make_reflection(mirror(pt(0, 0), e(2, 1)))
        with pytest.raises(ValueError):
            motion_reflection(r.to_isometry(), pt(3, 0))
        with pytest.raises(ValueError):
            motion_reflection(Isometry.identity(2), pt(1, 1))

    def test_motion_reflection_is_below_on_corpus(self):
        rng = random.Random(13)
        for dim in (1, 2, 3):
            for w in corpus(dim, 25, rng):
                if w.is_identity():
                    continue
                x = next(
                    p
                    for p in AffineSubspaceE.full(dim).points()
                    if w.apply(p) != p
                )
                assert is_reflection_below(motion_reflection(w, x), w)


class TestIntervals:
    def test_identity_is_always_inside(self):
        for w in corpus(2, 10, seed=3):
            assert interval_contains(w, Isometry.identity(2))

    def test_endpoint_is_inside(self):
        for w in corpus(2, 10, seed=4):
            assert interval_contains(w, w)

    def test_half_translation_mirror(self):
        w = translation(vec(2, 0))
        r = make_reflection(mirror(pt(1, 0), e(2, 0))).to_isometry()
        assert interval_contains(w, r)
        assert interval_leq(w, Isometry.identity(2), r)
        assert interval_leq(w, r, w)
        assert not interval_leq(w, w, r)


class TestInvariantSuite:
    def test_complementary_orthogonal_invariants(self):
        rng = random.Random(83)
        for dim in range(1, 7):
            for w in corpus(dim, 40, rng):
                cls = classify(w)
                mov, mn = cls.move_set, cls.min_set
                assert mov.dim + mn.dim == dim
                total = span(
                    list(mov.direction.basis) + list(mn.direction.basis), ambient=dim
                )
                assert total == LinearSubspace.full(dim)
                for a in mov.direction.basis:
                    for b in mn.direction.basis:
                        assert a.dot(b) == 0
                mu = mov.mu
                for x in mn.points():
                    assert w.apply(x) - x == mu
                assert w.image_of_affine(mn) == mn

    def test_motion_is_affine_in_the_point(self):
        rng = random.Random(19)
        for dim in (2, 3):
            for w in corpus(dim, 20, rng):
                x = Point([rng.randint(-3, 3) for _ in range(dim)])
                y = Point([rng.randint(-3, 3) for _ in range(dim)])
                c = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                combo = Point(
                    c * a + (1 - c) * b
                    for a, b in zip(x.coords, y.coords)
                )
                motion = (w.apply(combo) - combo)
                expected = (w.apply(x) - x).scale(c) + (w.apply(y) - y).scale(1 - c)
                assert motion == expected

    def test_parity_flips_under_reflection(self):
        rng = random.Random(29)
        for dim in (1, 2, 3, 4):
            for w in corpus(dim, 25, rng):
                r = random_reflection(dim, rng)
                before = reflection_length(w)
                after = reflection_length(r.to_isometry().compose(w))
                assert abs(after - before) == 1

    def test_move_set_transition(self):
        rng = random.Random(37)
        for dim in (2, 3, 4):
            for w in corpus(dim, 30, rng):
                r = random_reflection(dim, rng)
                mov = move_set(w)
                product_mov = move_set(r.to_isometry().compose(w))
                if mov.direction.contains(r.root):
                    assert product_mov.subset_of(mov)
                    assert product_mov.dim == mov.dim - 1
                else:
                    from scherk.linalg import subspace_sum

                    grown = AffineSubspaceV(
                        subspace_sum(mov.direction, span([r.root])), mov.mu
                    )
                    assert product_mov == grown

    def test_descent_shapes(self):
        rng = random.Random(41)
        for dim in (2, 3):
            for w in corpus(dim, 40, rng):
                if w.is_identity():
                    continue
                x = next(
                    p
                    for p in AffineSubspaceE.full(dim).points()
                    if w.apply(p) != p
                )
                r = motion_reflection(w, x)
                product = r.to_isometry().compose(w)
                wcls = classify(w)
                pcls = classify(product)
                assert pcls.length == wcls.length - 1
                if wcls.tag == ELLIPTIC:
                    assert pcls.tag == ELLIPTIC
                    assert wcls.min_set.subset_of(pcls.min_set)
                    assert pcls.min_set.dim == wcls.min_set.dim + 1
                elif pcls.tag == HYPERBOLIC:
                    assert pcls.move_set.subset_of(wcls.move_set)
                    assert pcls.move_set.dim == wcls.move_set.dim - 1
                else:
                    assert (
                        orthogonal_complement(pcls.min_set.direction)
                        == wcls.move_set.linear_span()
                    )

    def test_rebasing_leaves_invariant_dimensions_alone(self):
        # conjugating by a translation moves the basepoint; the invariant
        # data moves with it and the type and length are unchanged
        rng = random.Random(43)
        for w in corpus(3, 20, rng):
            shift = translation(Vector([rng.randint(-3, 3) for _ in range(3)]))
            conjugated = shift.compose(w).compose(shift.inverse())
            assert classify(conjugated).tag == classify(w).tag
            assert classify(conjugated).length == classify(w).length
