"""Tests for resolutions, homological dimensions and the Nakayama functor on modules."""

import random
from collections import Counter
from collections.abc import Iterator
from itertools import combinations

import pytest

from nakayama_ar.core.algebra import (
    CanonicalMap,
    Interval,
    NakayamaAlgebra,
    a4gamma,
    create_algebra,
    hereditary,
    longrel,
    radsquare,
)
from nakayama_ar.core.complexes import ComplexKind, homology
from nakayama_ar.core.homalg import (
    Side,
    gdim_bound,
    global_dimension,
    homological_dims,
    inj_resolution,
    nakayama_map,
    nakayama_module,
    proj_resolution,
    resolution,
    syzygy,
)
from nakayama_ar.errors import WrongKind


TEST_ALGEBRAS = [
    pytest.param(algebra, id=algebra.label, marks=[pytest.mark.slow] if algebra.n == 6 else [])
    for algebra in [
        a4gamma(),
        *(family(n) for family in (hereditary, radsquare, longrel) for n in range(3, 7)),
    ]
]


def minimal_relation_sets(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every set of relation paths on A_n in which no path contains another."""
    paths = [(u, v) for u in range(1, n + 1) for v in range(u + 2, n + 1)]
    for size in range(len(paths) + 1):
        for chosen in combinations(paths, size):
            if not any(a != b and b[0] <= a[0] and a[1] <= b[1] for a in chosen for b in chosen):
                yield list(chosen)


class TestResolutions:
    def test_projective_resolution_shape(self, a4: NakayamaAlgebra) -> None:
        res = resolution(a4, Interval(3, 4))
        assert res.side is Side.PROJECTIVE
        assert res.terms == [Interval(2, 4), Interval(1, 2), Interval(1, 1)]
        assert res.length == 2
        assert res.complex.degrees == [-2, -1, 0]

    def test_injective_resolution_shape(self, a4: NakayamaAlgebra) -> None:
        res = resolution(a4, Interval(2, 2), "inj")
        assert res.terms == [Interval(2, 4), Interval(3, 4)]
        assert res.complex.kind is ComplexKind.INJECTIVE

    def test_resolutions_are_quasi_isomorphic_to_the_module(self, a4: NakayamaAlgebra) -> None:
        for module in a4.indecomposables():
            expected = {0: Counter({module: 1})}
            assert homology(proj_resolution(a4, module)) == expected
            assert homology(inj_resolution(a4, module)) == expected

    @pytest.mark.parametrize("algebra", TEST_ALGEBRAS)
    def test_exact_and_minimal_everywhere(self, algebra: NakayamaAlgebra) -> None:
        for module in algebra.indecomposables():
            expected = {0: Counter({module: 1})}
            pdim, idim = homological_dims(algebra, module)
            projective = proj_resolution(algebra, module)
            injective = inj_resolution(algebra, module)
            assert homology(projective) == expected, module
            assert homology(injective) == expected, module
            assert projective.is_minimal and injective.is_minimal
            assert projective.degrees == list(range(-pdim, 1))
            assert injective.degrees == list(range(0, idim + 1))

    def test_syzygies(self, a4: NakayamaAlgebra) -> None:
        assert syzygy(a4, Interval(3, 4)) == Interval(2, 2)
        assert syzygy(a4, Interval(1, 1)) is None
        assert syzygy(a4, Interval(2, 2), inverse=True) == Interval(3, 4)
        assert syzygy(a4, None) is None


class TestDimensions:
    def test_dims_of_simple(self, a4: NakayamaAlgebra) -> None:
        assert homological_dims(a4, Interval(2, 2)) == (1, 1)
        assert homological_dims(a4, Interval(3, 4)) == (2, 0)

    def test_worked_example(self, a4: NakayamaAlgebra) -> None:
        assert global_dimension(a4) == 2
        assert gdim_bound(a4) == 2

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_radical_square_zero_reaches_the_bound(self, n: int) -> None:
        alg = radsquare(n)
        assert global_dimension(alg) == n - 1
        assert gdim_bound(alg) == n - 1

    def test_hereditary(self) -> None:
        assert global_dimension(hereditary(4)) == 1
        assert gdim_bound(hereditary(4)) == 1

    @pytest.mark.parametrize(
        "algebra",
        [
            longrel(5),
            create_algebra(6, [(1, 3), (4, 6)]),
            create_algebra(6, [(1, 4), (2, 5), (3, 6)]),
            create_algebra(7, [(1, 3), (2, 5), (5, 7)]),
        ],
    )
    def test_bound_dominates(self, algebra: NakayamaAlgebra) -> None:
        assert gdim_bound(algebra) >= global_dimension(algebra)

    @pytest.mark.slow
    def test_bound_dominates_random_relations(self) -> None:
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(3, 7)
            drawn = set()
            for _ in range(rng.randint(1, n)):
                u = rng.randint(1, n - 2)
                drawn.add((u, rng.randint(u + 2, n)))
            # keep only relations that contain no other one
            relations = [
                a for a in drawn if not any(b != a and a[0] <= b[0] and b[1] <= a[1] for b in drawn)
            ]
            algebra = create_algebra(n, relations)
            assert gdim_bound(algebra) >= global_dimension(algebra), relations

    @pytest.mark.parametrize("n", [3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
    def test_all_length_two_relations_iff_maximal(self, n: int) -> None:
        length_two = {(i, i + 2) for i in range(1, n - 1)}
        seen = 0
        for relations in minimal_relation_sets(n):
            algebra = create_algebra(n, relations)
            maximal = global_dimension(algebra) == n - 1
            assert maximal == (set(relations) == length_two), relations
            seen += 1
        assert seen > 1


class TestNakayamaFunctor:
    def test_projective_to_injective(self, a4: NakayamaAlgebra) -> None:
        for i in range(1, 5):
            assert nakayama_module(a4, a4.projective(i)) == a4.injective(i)
            assert nakayama_module(a4, a4.injective(i), inverse=True) == a4.projective(i)

    def test_wrong_kind(self, a4: NakayamaAlgebra) -> None:
        with pytest.raises(WrongKind):
            nakayama_module(a4, Interval(2, 3))
        with pytest.raises(WrongKind):
            nakayama_module(a4, Interval(1, 2), inverse=True)

    def test_map(self, a4: NakayamaAlgebra) -> None:
        f = CanonicalMap(a4.projective(1), a4.projective(2))
        image = nakayama_map(a4, f)
        assert (image.src, image.dst) == (a4.injective(1), a4.injective(2))
