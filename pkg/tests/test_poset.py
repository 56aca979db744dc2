"""Model poset order, bounds, bowties, completion, and DOT export."""

import itertools
import random

import pytest

from scherk.affine import AffineSubspaceE, AffineSubspaceV, Point
from scherk.isometry import Isometry, make_reflection, motion_reflection, translation
from scherk.linalg import LinearSubspace, Vector, span
from scherk.oracle import coordinate_universe, corpus
from scherk.poset import (
    BoundFamily,
    Elliptic,
    Hyperbolic,
    New,
    PosetContext,
    PosetError,
    dm_join,
    dm_meet,
    elliptic_iso,
    find_bowtie,
    hasse_dot,
    inv_map,
    is_bowtie,
    is_lattice,
    join,
    leq,
    meet,
    rank,
)


def vec(*coords):
    return Vector(coords)


def pt(*coords):
    return Point(coords)


def e(n, i):
    return Vector.basis(n, i)


def elliptic(point, *directions):
    n = point.dim
    return Elliptic(AffineSubspaceE(point, span(list(directions), ambient=n)))


def hyperbolic(shift, *directions):
    n = shift.dim
    return Hyperbolic(AffineSubspaceV(span(list(directions), ambient=n), shift))


def plane_top_3d():
    """Top h^M with M the plane z = 1 in the vector space."""
    return Hyperbolic(AffineSubspaceV(span([e(3, 0), e(3, 1)]), vec(0, 0, 1)))


class TestInvMap:
    def test_identity_maps_to_full_space(self):
        assert inv_map(Isometry.identity(2)) == Elliptic(AffineSubspaceE.full(2))

    def test_translation_maps_to_point_move_set(self):
        p = inv_map(translation(vec(2, 0)))
        assert p == hyperbolic(vec(2, 0))

    def test_reflection_maps_to_mirror(self):
        mirror = AffineSubspaceE(pt(0, 0), span([e(2, 0)]))
        r = make_reflection(mirror)
        assert inv_map(r.to_isometry()) == Elliptic(mirror)


class TestOrder:
    def test_bottom_below_every_hyperbolic(self):
        bottom = Elliptic(AffineSubspaceE.full(3))
        assert leq(bottom, plane_top_3d())

    def test_hyperbolic_never_below_elliptic(self):
        h = hyperbolic(vec(2, 0))
        for el in (
            Elliptic(AffineSubspaceE.full(2)),
            elliptic(pt(0, 0), e(2, 0)),
        ):
            assert not leq(h, el)

    def test_mixed_comparison_through_span(self):
        b = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        m1 = hyperbolic(vec(0, 0, 1), e(3, 0))
        assert leq(b, m1)

    def test_augmented_clauses(self):
        n_e1 = New(span([e(3, 0)]))
        n_big = New(span([e(3, 0), e(3, 1)]))
        assert leq(n_e1, n_big)
        assert not leq(n_big, n_e1)
        assert leq(n_e1, plane_top_3d())
        b = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        assert leq(b, n_e1)
        assert not leq(n_e1, b)
        assert not leq(plane_top_3d(), n_big)

    def test_order_axioms_on_curated_universe(self):
        universe = coordinate_universe(3, plane_top_3d())
        elements = universe.elements
        lm = universe.leq_matrix
        n = len(elements)
        for i in range(n):
            assert lm[i][i]
        for i, j in itertools.product(range(n), repeat=2):
            if lm[i][j] and lm[j][i]:
                assert elements[i] == elements[j]
        for i, j, k in itertools.product(range(n), repeat=3):
            if lm[i][j] and lm[j][k]:
                assert lm[i][k]


class TestRank:
    def test_bottom_rank_zero(self):
        assert rank(Elliptic(AffineSubspaceE.full(3))) == 0

    def test_point_move_set_rank_two(self):
        assert rank(hyperbolic(vec(2, 0))) == 2

    def test_mirror_rank_one(self):
        assert rank(elliptic(pt(0, 0), e(2, 0))) == 1

    def test_new_rank_between(self):
        n_e1 = New(span([e(3, 0)]))
        assert rank(n_e1) == 2

    def test_context_rejects_foreign_elements(self):
        ctx = PosetContext(top=elliptic(pt(0, 0), e(2, 0)))
        with pytest.raises(PosetError):
            rank(hyperbolic(vec(2, 0)), ctx)

    def test_rank_matches_reflection_length_of_preimages(self):
        rng = random.Random(121)
        from scherk.isometry import reflection_length

        for dim in (1, 2, 3):
            for w in corpus(dim, 30, rng):
                assert rank(inv_map(w)) == reflection_length(w)


class TestOrderPreservation:
    def test_descents_are_covering_in_the_poset(self):
        rng = random.Random(131)
        for dim in (2, 3):
            for w in corpus(dim, 500, rng):
                if w.is_identity():
                    continue
                x = next(
                    p
                    for p in AffineSubspaceE.full(dim).points()
                    if w.apply(p) != p
                )
                r = motion_reflection(w, x)
                shorter = r.to_isometry().compose(w)
                low, high = inv_map(shorter), inv_map(w)
                assert leq(low, high)
                assert rank(high) - rank(low) == 1


class TestMeet:
    def test_two_points_meet_along_their_line(self):
        ctx = PosetContext(top=plane_top_3d())
        p1 = elliptic(pt(0, 0, 0))
        p2 = elliptic(pt(0, 1, 0))
        result = meet(p1, p2, ctx)
        assert result == elliptic(pt(0, 0, 0), e(3, 1))

    def test_hyperbolic_pair_with_common_point(self):
        ctx = PosetContext(top=plane_top_3d())
        m1 = hyperbolic(vec(0, 0, 1), e(3, 0))
        m2 = hyperbolic(vec(0, 0, 1), e(3, 1))
        result = meet(m1, m2, ctx)
        assert result == hyperbolic(vec(0, 0, 1))

    def test_disjoint_hyperbolics_give_a_family(self):
        ctx = PosetContext(top=plane_top_3d())
        m1 = hyperbolic(vec(0, 0, 1), e(3, 0))
        m2 = hyperbolic(vec(0, 1, 1), e(3, 0))
        result = meet(m1, m2, ctx)
        assert isinstance(result, BoundFamily)
        assert result.kind == "e"
        assert result.direction == span([e(3, 1), e(3, 2)])
        member = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        assert result.contains(member)
        assert leq(result.representative(), m1)

    def test_elliptic_with_hyperbolic(self):
        ctx = PosetContext(top=plane_top_3d())
        b = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        m1 = hyperbolic(vec(0, 0, 1), e(3, 0))
        result = meet(b, m1, ctx)
        assert isinstance(result, Elliptic)
        assert leq(result, b) and leq(result, m1)

    def test_meet_with_comparable_pair_returns_lower(self):
        ctx = PosetContext(top=plane_top_3d())
        m_small = hyperbolic(vec(0, 0, 1), e(3, 0))
        assert meet(m_small, plane_top_3d(), ctx) == m_small


class TestJoin:
    def test_crossing_elliptics_join_at_intersection(self):
        ctx = PosetContext(top=plane_top_3d())
        b1 = elliptic(pt(0, 0, 0), e(3, 0), e(3, 2))
        b2 = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        result = join(b1, b2, ctx)
        assert result == elliptic(pt(0, 0, 0), e(3, 2))

    def test_join_with_top_is_top(self):
        ctx = PosetContext(top=plane_top_3d())
        b = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        assert join(b, plane_top_3d(), ctx) == plane_top_3d()

    def test_disjoint_parallel_mirrors_under_line_top(self):
        top = hyperbolic(vec(0, 1), e(2, 0))
        ctx = PosetContext(top=top)
        b1 = elliptic(pt(0, 0), e(2, 0))
        b2 = elliptic(pt(0, 1), e(2, 0))
        result = join(b1, b2, ctx)
        assert result == hyperbolic(vec(0, 1))

    def test_disjoint_parallel_mirrors_under_plane_top(self):
        ctx = PosetContext(top=plane_top_3d())
        b1 = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        b2 = elliptic(pt(1, 0, 0), e(3, 1), e(3, 2))
        result = join(b1, b2, ctx)
        assert isinstance(result, BoundFamily)
        assert result.kind == "h"
        assert result.direction == span([e(3, 0)])
        assert result.contains(hyperbolic(vec(0, 0, 1), e(3, 0)))
        rep = result.representative()
        assert leq(b1, rep) and leq(b2, rep)

    def test_hyperbolic_join_is_hull(self):
        ctx = PosetContext(top=plane_top_3d())
        m1 = hyperbolic(vec(0, 0, 1), e(3, 0))
        m2 = hyperbolic(vec(0, 1, 1), e(3, 0))
        result = join(m1, m2, ctx)
        assert result == plane_top_3d()


class TestLattice:
    def test_elliptic_contexts_are_lattices(self):
        ctx = PosetContext(top=elliptic(pt(0, 0, 0), e(3, 0)))
        assert is_lattice(ctx)

    def test_line_move_set_is_a_lattice(self):
        ctx = PosetContext(top=hyperbolic(vec(0, 1), e(2, 0)))
        assert is_lattice(ctx)

    def test_plane_move_set_is_not(self):
        assert not is_lattice(PosetContext(top=plane_top_3d()))

    def test_augmented_always_is(self):
        assert is_lattice(PosetContext(top=plane_top_3d(), augmented=True))


class TestBowties:
    def test_find_bowtie_matches_expected_layout(self):
        ctx = PosetContext(top=plane_top_3d())
        a, b, c, d = find_bowtie(ctx)
        assert a == hyperbolic(vec(0, 0, 1), e(3, 0))
        assert b == hyperbolic(vec(0, 1, 1), e(3, 0))
        assert c == elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        assert d == elliptic(pt(1, 0, 0), e(3, 1), e(3, 2))
        assert is_bowtie(a, b, c, d, ctx)

    def test_line_top_has_no_bowtie(self):
        ctx = PosetContext(top=hyperbolic(vec(0, 1), e(2, 0)))
        with pytest.raises(PosetError):
            find_bowtie(ctx)

    def test_second_direction_gives_a_distinct_bowtie(self):
        ctx = PosetContext(top=plane_top_3d())
        m1 = hyperbolic(vec(0, 0, 1), e(3, 1))
        m2 = hyperbolic(vec(1, 0, 1), e(3, 1))
        b1 = elliptic(pt(0, 0, 0), e(3, 0), e(3, 2))
        b2 = elliptic(pt(0, 1, 0), e(3, 0), e(3, 2))
        assert is_bowtie(m1, m2, b1, b2, ctx)

    def test_comparable_tuples_are_not_bowties(self):
        ctx = PosetContext(top=plane_top_3d())
        a, b, c, d = find_bowtie(ctx)
        assert not is_bowtie(a, a, c, d, ctx)
        assert not is_bowtie(a, b, c, c, ctx)
        assert not is_bowtie(a, plane_top_3d(), c, d, ctx)

    def test_dim_three_top_also_has_bowties(self):
        top = Hyperbolic(
            AffineSubspaceV(
                span([e(4, 0), e(4, 1), e(4, 2)]), vec(0, 0, 0, 1)
            )
        )
        ctx = PosetContext(top=top)
        a, b, c, d = find_bowtie(ctx)
        assert is_bowtie(a, b, c, d, ctx)


class TestCompletion:
    def test_meet_of_disjoint_hyperbolics_is_new(self):
        ctx = PosetContext(top=plane_top_3d(), augmented=True)
        m1 = hyperbolic(vec(0, 0, 1), e(3, 0))
        m2 = hyperbolic(vec(0, 1, 1), e(3, 0))
        assert dm_meet([m1, m2], ctx) == New(span([e(3, 0)]))

    def test_join_of_parallel_elliptics_is_new(self):
        ctx = PosetContext(top=plane_top_3d(), augmented=True)
        b1 = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        b2 = elliptic(pt(1, 0, 0), e(3, 1), e(3, 2))
        assert dm_join([b1, b2], ctx) == New(span([e(3, 0)]))

    def test_singletons_are_fixed_points(self):
        ctx = PosetContext(top=plane_top_3d(), augmented=True)
        for p in (
            plane_top_3d(),
            New(span([e(3, 0)])),
            elliptic(pt(0, 0, 0), e(3, 1), e(3, 2)),
        ):
            assert dm_meet([p], ctx) == p
            assert dm_join([p], ctx) == p

    def test_mixed_meet_with_new_element(self):
        ctx = PosetContext(top=plane_top_3d(), augmented=True)
        n_u = New(span([e(3, 0)]))
        m = hyperbolic(vec(0, 0, 1), e(3, 0), e(3, 1))
        assert dm_meet([n_u, m], ctx) == n_u
        b = elliptic(pt(0, 0, 0), e(3, 1), e(3, 2))
        result = dm_meet([n_u, b], ctx)
        assert isinstance(result, Elliptic)
        assert leq(result, n_u) and leq(result, b)

    def test_meet_drops_to_bottom_when_directions_clash(self):
        ctx = PosetContext(top=plane_top_3d(), augmented=True)
        n1 = New(span([e(3, 0)]))
        n2 = New(span([e(3, 1)]))
        assert dm_meet([n1, n2], ctx) == Elliptic(AffineSubspaceE.full(3))

    def test_join_of_news_sums_directions(self):
        ctx = PosetContext(top=plane_top_3d(), augmented=True)
        n1 = New(span([e(3, 0)]))
        n2 = New(span([e(3, 1)]))
        assert dm_join([n1, n2], ctx) == plane_top_3d()

    def test_plain_context_rejects_dm_ops(self):
        ctx = PosetContext(top=plane_top_3d())
        with pytest.raises(PosetError):
            dm_meet([plane_top_3d()], ctx)


class TestEllipticIso:
    def test_top_and_bottom_map_to_extremes(self):
        top = elliptic(pt(0, 0))
        ctx = PosetContext(top=top)
        iso = elliptic_iso(ctx)
        assert iso.to_subspace(top) == LinearSubspace.full(2)
        assert iso.to_subspace(Elliptic(AffineSubspaceE.full(2))) == span(
            [], ambient=2
        )

    def test_axis_maps_to_normal_line(self):
        ctx = PosetContext(top=elliptic(pt(0, 0)))
        iso = elliptic_iso(ctx)
        x_axis = elliptic(pt(0, 0), e(2, 0))
        assert iso.to_subspace(x_axis) == span([e(2, 1)])

    def test_round_trip_and_order_reversal(self):
        base = elliptic(pt(1, 2, 0))
        ctx = PosetContext(top=base)
        iso = elliptic_iso(ctx)
        family = [
            base,
            elliptic(pt(1, 2, 0), e(3, 0)),
            elliptic(pt(1, 2, 0), e(3, 1)),
            elliptic(pt(1, 2, 0), e(3, 0), e(3, 1)),
            Elliptic(AffineSubspaceE.full(3)),
        ]
        images = [iso.to_subspace(p) for p in family]
        assert len(set(images)) == len(family)
        for p, s in zip(family, images):
            assert iso.from_subspace(s) == p
        for p, q in itertools.product(family, repeat=2):
            assert leq(p, q) == iso.to_subspace(p).subset_of(iso.to_subspace(q))

    def test_rejects_hyperbolic_context(self):
        with pytest.raises(PosetError):
            elliptic_iso(PosetContext(top=plane_top_3d()))


class TestHasse:
    def test_single_node(self):
        dot = hasse_dot([Elliptic(AffineSubspaceE.full(2))])
        assert dot.count("label") == 1
        assert "->" not in dot

    def test_chain_is_a_path(self):
        bottom = Elliptic(AffineSubspaceE.full(2))
        middle = elliptic(pt(0, 0), e(2, 0))
        top = hyperbolic(vec(2, 0))
        dot = hasse_dot([bottom, middle, top])
        assert dot.count("->") == 2

    def test_bowtie_subgraph_shape(self):
        ctx = PosetContext(top=plane_top_3d())
        a, b, c, d = find_bowtie(ctx)
        bottom = Elliptic(AffineSubspaceE.full(3))
        dot = hasse_dot([plane_top_3d(), a, b, c, d, bottom])
        # bottom -> c, d; c, d -> a, b; a, b -> top: eight covering edges
        assert dot.count("->") == 8

    def test_declared_top_enforced(self):
        with pytest.raises(PosetError):
            hasse_dot(
                [hyperbolic(vec(2, 0))],
                top=elliptic(pt(0, 0), e(2, 0)),
            )

    def test_deterministic_output(self):
        ctx = PosetContext(top=plane_top_3d())
        a, b, c, d = find_bowtie(ctx)
        elements = [plane_top_3d(), a, b, c, d, Elliptic(AffineSubspaceE.full(3))]
        rng = random.Random(7)
        for _ in range(5):
            shuffled = elements[:]
            rng.shuffle(shuffled)
            assert hasse_dot(shuffled) == hasse_dot(elements)
