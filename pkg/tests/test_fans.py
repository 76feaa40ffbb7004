"""Crosspolytope fans of Bott towers and the generic fan checks.

Core claims:

1. build_fan generator tables: a_{i,0} = e_i and a_{i,1} carries row i of the
   Bott matrix from coordinate i on (so -1 at coordinate i, zeros before).
2. Tower fans are smooth (triangular determinant +-1), complete, have 2^k
   maximal cones, and their minimal non-faces are the k opposite pairs.
3. is_smooth / is_complete / is_fano behave correctly on hand-built
   non-tower inputs, including the degenerate-cone error path.
4. Hirzebruch-type Fano boundary: c in {-1, 0, 1} exactly.
5. apply_unimodular and fans_isomorphic: scrambling by GL_n(Z) and ray
   relabeling is undone by the search; non-isomorphic fans return None.
"""

from __future__ import annotations

import random

import pytest

from bott_towers import (
    BottFan,
    GeneralFan,
    IntegralSequence,
    RejectionError,
    ValidationError,
    apply_unimodular,
    binary_codes,
    build_fan,
    fans_isomorphic,
    is_complete,
    is_fano,
    is_smooth,
    primitive_collections,
)
from helpers import (
    mat_mul,
    minor_det,
    permute_rays,
    random_sequence,
    random_unimodular,
)


def hirzebruch_fan(c: int) -> GeneralFan:
    """The 2-dimensional tower fan with c(1,2) = c, as a generic fan."""
    return build_fan(IntegralSequence(2, {(1, 2): c}), 2).as_general_fan()


# ===================================================================
# 1. Generator tables
# ===================================================================

class TestBuildFan:
    def test_binary_codes_order(self):
        assert list(binary_codes(2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_product_of_lines(self):
        fan = build_fan(IntegralSequence.zero(3), 3)
        assert fan.generator(1, 0) == (1, 0, 0)
        assert fan.generator(2, 0) == (0, 1, 0)
        assert fan.generator(3, 0) == (0, 0, 1)
        assert fan.generator(1, 1) == (-1, 0, 0)
        assert fan.generator(2, 1) == (0, -1, 0)
        assert fan.generator(3, 1) == (0, 0, -1)

    def test_hirzebruch_table(self):
        fan = build_fan(IntegralSequence(2, {(1, 2): 3}), 2)
        assert fan.as_general_fan().rays == (
            (1, 0), (-1, 3), (0, 1), (0, -1))

    def test_bounded_flag_table(self):
        fan = build_fan(IntegralSequence.bounded_flag(3), 3)
        assert fan.generator(1, 1) == (-1, -1, -1)
        assert fan.generator(2, 1) == (0, -1, -1)
        assert fan.generator(3, 1) == (0, 0, -1)

    def test_bounded_flag_matches_reversed_convention(self):
        # Reversing coordinates turns a_{i,1} = -e_i-...-e_k into the
        # -e_1-...-e_j staircase; the two presentations are isomorphic fans.
        k = 4
        fan = build_fan(IntegralSequence.bounded_flag(k), k).as_general_fan()
        reversal = [[1 if i + j == k - 1 else 0 for j in range(k)]
                    for i in range(k)]
        reversed_fan = apply_unimodular(fan, reversal)
        staircase = set()
        for j in range(1, k + 1):
            staircase.add(tuple(-1 if t < j else 0 for t in range(k)))
            staircase.add(tuple(1 if t == j - 1 else 0 for t in range(k)))
        assert set(reversed_fan.rays) == staircase
        assert fans_isomorphic(fan, reversed_fan) is not None

    def test_generator_shape_invariant(self):
        rng = random.Random(2001)
        for _ in range(15):
            k = rng.randint(1, 6)
            c = random_sequence(rng, k)
            fan = build_fan(c, k)
            for i in range(1, k + 1):
                g = fan.generator(i, 1)
                assert g[i - 1] == -1
                assert all(x == 0 for x in g[:i - 1])

    def test_cone_count_virtual(self):
        fan = build_fan(IntegralSequence.zero(4), 4)
        gf = fan.as_general_fan()
        assert len(gf.cones) == 16
        assert len(gf.rays) == 8

    def test_k_bounds(self):
        c = IntegralSequence(2)
        with pytest.raises(ValidationError):
            build_fan(c, 3)
        with pytest.raises(ValidationError):
            build_fan(c, 0)


# ===================================================================
# 2. GeneralFan validation
# ===================================================================

class TestGeneralFan:
    def test_non_primitive_ray_rejected(self):
        with pytest.raises(ValidationError):
            GeneralFan(2, [(2, 4), (0, 1)], [(0, 1)])

    def test_zero_ray_rejected(self):
        with pytest.raises(ValidationError):
            GeneralFan(2, [(0, 0), (0, 1)], [(0, 1)])

    def test_duplicate_ray_rejected(self):
        with pytest.raises(ValidationError):
            GeneralFan(2, [(1, 0), (1, 0)], [(0, 1)])

    def test_cone_size_must_match_dim(self):
        with pytest.raises(ValidationError):
            GeneralFan(2, [(1, 0), (0, 1)], [(0,)])

    def test_cone_index_range(self):
        with pytest.raises(ValidationError):
            GeneralFan(2, [(1, 0), (0, 1)], [(0, 2)])

    def test_cones_canonicalized(self):
        a = GeneralFan(2, [(1, 0), (0, 1)], [(1, 0)])
        b = GeneralFan(2, [(1, 0), (0, 1)], [(0, 1)])
        assert a == b


# ===================================================================
# 3. Smoothness, completeness, primitive collections
# ===================================================================

class TestChecks:
    def test_tower_fans_smooth_complete(self):
        rng = random.Random(2002)
        for _ in range(8):
            k = rng.randint(1, 5)
            fan = build_fan(random_sequence(rng, k), k)
            assert is_smooth(fan)
            assert is_complete(fan)

    def test_non_smooth_example(self):
        fan = GeneralFan(2, [(1, 0), (1, 2), (-1, 0), (0, -1)],
                         [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert not is_smooth(fan)

    def test_degenerate_cone_reported(self):
        fan = GeneralFan(2, [(1, 0), (-1, 0), (0, 1)],
                         [(0, 1), (0, 2)])
        with pytest.raises(RejectionError) as err:
            is_smooth(fan)
        assert err.value.code == "degenerate cone"

    def test_half_plane_not_complete(self):
        fan = GeneralFan(2, [(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2)])
        assert not is_complete(fan)

    def test_punctured_fan_not_complete(self):
        full = hirzebruch_fan(1)
        punctured = GeneralFan(2, full.rays, full.cones[:-1])
        assert not is_complete(punctured)

    def test_overlapping_cover_caught_by_probe(self):
        # Facet counts pair up, but the four cones only cover the first
        # quadrant; only the containment probe can expose that.
        fan = GeneralFan(2, [(1, 0), (0, 1), (1, 1), (2, 1)],
                         [(0, 1), (0, 3), (2, 1), (2, 3)])
        assert not is_complete(fan)

    def test_dimension_one_complete(self):
        fan = GeneralFan(1, [(1,), (-1,)], [(0,), (1,)])
        assert is_complete(fan) and is_smooth(fan)

    def test_primitive_collections_tower(self):
        fan = build_fan(IntegralSequence(2, {(1, 2): 2}), 2)
        assert primitive_collections(fan) == [(0, 1), (2, 3)]
        fan3 = build_fan(IntegralSequence.zero(3), 3)
        assert primitive_collections(fan3) == [(0, 1), (2, 3), (4, 5)]

    def test_primitive_collections_general_fan(self):
        gf = hirzebruch_fan(2)
        assert primitive_collections(gf) == [(0, 1), (2, 3)]

    def test_primitive_collections_rejects_projective_plane(self):
        plane = GeneralFan(2, [(1, 0), (0, 1), (-1, -1)],
                           [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(RejectionError) as err:
            primitive_collections(plane)
        assert err.value.code == "not crosspolytope combinatorics"


# ===================================================================
# 4. Fano boundary
# ===================================================================

class TestFano:
    def test_projective_line_fano(self):
        assert is_fano(build_fan(IntegralSequence(1), 1))

    def test_hirzebruch_sweep(self):
        for c in range(-5, 6):
            expected = c in (-1, 0, 1)
            assert is_fano(hirzebruch_fan(c)) is expected

    def test_product_of_lines_fano(self):
        assert is_fano(build_fan(IntegralSequence.zero(3), 3))

    def test_incomplete_input_rejected(self):
        half = GeneralFan(2, [(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2)])
        with pytest.raises(RejectionError) as err:
            is_fano(half)
        assert err.value.code == "not complete"


# ===================================================================
# 5. Unimodular maps and fan isomorphism
# ===================================================================

class TestIsomorphism:
    def test_apply_unimodular_validates(self):
        fan = hirzebruch_fan(1)
        with pytest.raises(ValidationError):
            apply_unimodular(fan, [[2, 0], [0, 1]])
        with pytest.raises(ValidationError):
            apply_unimodular(fan, [[1, 0]])

    def test_apply_unimodular_composes(self):
        rng = random.Random(2003)
        fan = build_fan(random_sequence(rng, 3), 3).as_general_fan()
        m1 = random_unimodular(rng, 3)
        m2 = random_unimodular(rng, 3)
        once = apply_unimodular(apply_unimodular(fan, m1), m2)
        combined = apply_unimodular(fan, mat_mul(m2, m1))
        assert once == combined

    def test_identity_isomorphism(self):
        fan = hirzebruch_fan(3)
        result = fans_isomorphic(fan, fan)
        assert result is not None
        perm, matrix = result
        assert sorted(perm) == list(range(4))

    def test_scrambled_fan_recovered(self):
        rng = random.Random(2004)
        for _ in range(10):
            k = rng.randint(1, 4)
            fan = build_fan(random_sequence(rng, k, -3, 3), k).as_general_fan()
            scrambled = permute_rays(
                rng, apply_unimodular(fan, random_unimodular(rng, k)))
            result = fans_isomorphic(fan, scrambled)
            assert result is not None
            perm, matrix = result
            assert abs(minor_det(matrix)) == 1
            for idx, ray in enumerate(fan.rays):
                image = tuple(sum(matrix[r][t] * ray[t] for t in range(k))
                              for r in range(k))
                assert scrambled.rays[perm[idx]] == image

    def test_opposite_twists_isomorphic(self):
        assert fans_isomorphic(hirzebruch_fan(3), hirzebruch_fan(-3)) is not None

    def test_distinct_twists_not_isomorphic(self):
        assert fans_isomorphic(hirzebruch_fan(0), hirzebruch_fan(1)) is None
        assert fans_isomorphic(hirzebruch_fan(1), hirzebruch_fan(3)) is None

    def test_dimension_cap(self):
        fan = build_fan(IntegralSequence.zero(7), 7).as_general_fan()
        with pytest.raises(ValidationError):
            fans_isomorphic(fan, fan)
