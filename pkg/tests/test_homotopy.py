"""Tests for Hom in the homotopy category and Gaussian elimination."""

import random
from collections import Counter

import pytest

from nakayama_ar.core.algebra import Interval, NakayamaAlgebra, a4gamma, longrel, radsquare
from nakayama_ar.core.complexes import (
    build_complex,
    cone,
    direct_sum,
    homology,
    identity_map,
    nu_complex,
    shift,
    validate_chain_map,
)
from nakayama_ar.core.homalg import proj_resolution
from nakayama_ar.core.homotopy import hom_spaces, minimize


class TestHomSpaces:
    def test_stalk_projectives_match_module_hom(self, a4: NakayamaAlgebra) -> None:
        for i in range(1, 5):
            for j in range(1, 5):
                x = build_complex(a4, "P", {0: [i]})
                y = build_complex(a4, "P", {0: [j]})
                assert hom_spaces(x, y).dimension == a4.hom_dim(a4.projective(i), a4.projective(j))

    def test_ext_between_modules(self, a4: NakayamaAlgebra) -> None:
        # Hom_K(pS3, pS2[1]) = Ext^1(S3, S2)
        s3 = proj_resolution(a4, Interval(3, 3))
        s2 = proj_resolution(a4, Interval(2, 2))
        assert hom_spaces(s3, shift(s2, 1)).dimension == 1
        assert hom_spaces(s2, shift(s3, 1)).dimension == 0

    def test_contractible_has_no_endomorphisms(self, a4: NakayamaAlgebra) -> None:
        c = cone(identity_map(build_complex(a4, "P", {0: [3]})))
        space = hom_spaces(c, c)
        assert space.dimension == 0
        assert space.is_null_homotopic(identity_map(c))

    def test_class_maps_are_chain_maps(self, a4: NakayamaAlgebra) -> None:
        x = proj_resolution(a4, Interval(3, 4))
        space = hom_spaces(x, x)
        assert space.dimension == 1
        for f in space.class_maps():
            validate_chain_map(f)
        assert not space.is_null_homotopic(identity_map(x))

    def test_reduce_round_trip(self, a4: NakayamaAlgebra) -> None:
        x = proj_resolution(a4, Interval(2, 3))
        space = hom_spaces(x, x)
        vector = space.to_vector(identity_map(x))
        assert space.to_vector(space.to_map(vector)) == vector
        assert space.reduce(identity_map(x)) != (0,) * space.dimension


class TestMinimize:
    def test_contractible_vanishes(self, a4: NakayamaAlgebra) -> None:
        c = cone(identity_map(build_complex(a4, "P", {0: [3]})))
        result = minimize(c)
        assert result.complex.is_zero
        assert result.stripped == ((Interval(1, 3), -1),)

    def test_partial_cancellation(self, a4: NakayamaAlgebra) -> None:
        x = build_complex(a4, "P", {0: [1, 3], 1: [3]}, {0: [[1, 1]]})
        result = minimize(x)
        assert result.complex.signature() == ((0, (Interval(1, 1),)),)
        assert result.stripped == ((Interval(1, 3), 0),)
        assert homology(result.complex) == homology(x)

    def test_minimal_fixpoint(self, a4: NakayamaAlgebra) -> None:
        x = proj_resolution(a4, Interval(3, 4))
        result = minimize(x)
        assert result.stripped == ()
        assert str(result.complex) == str(x)

    def test_idempotent_and_tracked(self, a4: NakayamaAlgebra) -> None:
        x = build_complex(a4, "P", {-1: [3], 0: [1, 3], 1: [3]}, {-1: [[0], [1]], 0: [[1, 0]]})
        result = minimize(x, track=True)
        assert minimize(result.complex).stripped == ()
        assert result.inclusion is not None
        validate_chain_map(result.inclusion)
        assert homology(result.complex) == homology(x) == {1: Counter({Interval(2, 3): 1})}
        assert str(result.complex) == "0:{P1} 1:{P3} d0=[1]"

    @pytest.mark.parametrize("algebra", [a4gamma(), radsquare(4), longrel(5)], ids=lambda a: a.label)
    def test_random_complexes(self, algebra: NakayamaAlgebra, random_map) -> None:
        rng = random.Random(5)
        for _ in range(25):
            p = build_complex(algebra, "P", {0: [rng.randint(1, algebra.n)]})
            x = direct_sum(cone(random_map(algebra, rng)), shift(cone(identity_map(p)), rng.randint(-1, 1)))
            result = minimize(x, track=True)
            assert result.complex.is_minimal
            assert homology(result.complex) == homology(x)
            assert len(result.stripped) >= 1
            assert result.inclusion is not None
            validate_chain_map(result.inclusion)
            again = minimize(result.complex)
            assert again.stripped == ()
            assert str(again.complex) == str(result.complex)


@pytest.mark.slow
class TestSerreDuality:
    """dim Hom_K(X, Y) = dim Hom_K(Y, ν X) on random shifted modules and on cones between them."""

    @pytest.mark.parametrize(
        "algebra", [a4gamma(), radsquare(4), longrel(5)], ids=["a4gamma", "radsquare:4", "longrel:5"]
    )
    def test_random_pairs(self, algebra: NakayamaAlgebra) -> None:
        rng = random.Random(11)
        modules = algebra.indecomposables()
        for _ in range(50):
            x = shift(proj_resolution(algebra, rng.choice(modules)), rng.randint(-2, 2))
            y = shift(proj_resolution(algebra, rng.choice(modules)), rng.randint(-2, 2))
            assert hom_spaces(x, y).dimension == hom_spaces(y, nu_complex(x)).dimension

    @pytest.mark.parametrize(
        "algebra", [a4gamma(), radsquare(4), longrel(5)], ids=["a4gamma", "radsquare:4", "longrel:5"]
    )
    def test_cones(self, algebra: NakayamaAlgebra, random_map) -> None:
        rng = random.Random(13)
        for _ in range(20):
            x = cone(random_map(algebra, rng))
            y = cone(random_map(algebra, rng))
            assert hom_spaces(x, y).dimension == hom_spaces(y, nu_complex(x)).dimension
