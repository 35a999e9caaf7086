"""Tests for endomorphism algebras, decomposition and isomorphism testing."""

import pytest

from nakayama_ar.config import Settings
from nakayama_ar.core import endomorphisms
from nakayama_ar.core.algebra import Interval, NakayamaAlgebra, hereditary
from nakayama_ar.core.complexes import build_complex, direct_sum, shift, stalk_complex
from nakayama_ar.core.endomorphisms import decompose, end_algebra, is_isomorphic_k, l_p
from nakayama_ar.core.homalg import inj_resolution, proj_resolution
from nakayama_ar.errors import DecompositionFailure, KindMismatch, WrongKind


class TestEndAlgebra:
    def test_projective_stalk_is_local(self, a4: NakayamaAlgebra) -> None:
        endo = end_algebra(build_complex(a4, "P", {0: [3]}))
        assert endo.dimension == 1
        assert endo.radical_dimension == 0
        assert endo.is_local

    def test_sum_of_equal_stalks(self, a4: NakayamaAlgebra) -> None:
        endo = end_algebra(build_complex(a4, "P", {0: [2, 2]}))
        assert endo.dimension == 4
        assert not endo.is_local

    def test_radical_of_hereditary_sum(self) -> None:
        alg = hereditary(2)
        endo = end_algebra(build_complex(alg, "P", {0: [1, 2]}))
        # End(P1 + P2) is the path algebra: two idempotents and one arrow
        assert endo.dimension == 3
        assert endo.radical_dimension == 1

    def test_unit_acts_trivially(self, a4: NakayamaAlgebra) -> None:
        endo = end_algebra(proj_resolution(a4, Interval(3, 4)))
        assert endo.multiply(endo.unit, endo.unit) == endo.unit


class TestDecompose:
    def test_indecomposable_is_kept(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        x = proj_resolution(a4, Interval(3, 4))
        parts = decompose(x, settings)
        assert len(parts) == 1 and parts[0][1] == 1
        assert is_isomorphic_k(parts[0][0], x, settings)

    def test_multiplicities(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        p2 = build_complex(a4, "P", {0: [2]})
        parts = decompose(direct_sum(p2, p2, build_complex(a4, "P", {0: [4]})), settings)
        assert sorted((str(c), m) for c, m in parts) == [("0:{P2}", 2), ("0:{P4}", 1)]

    def test_hidden_summands(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        # P1 -> P2 and P1 -> P3 glued into one differential; the sum splits after a base change
        x = build_complex(a4, "P", {0: [1, 1], 1: [2, 3]}, {0: [[1, 1], [1, 1]]})
        parts = decompose(x, settings)
        assert sum(m for _, m in parts) == 3
        assert sorted(c.summand_count for c, m in parts for _ in range(m)) == [1, 1, 2]

    def test_order_by_lowest_degree(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        x = direct_sum(
            shift(proj_resolution(a4, Interval(2, 2)), -2),
            proj_resolution(a4, Interval(3, 4)),
        )
        parts = decompose(x, settings)
        assert [c.min_degree for c, _ in parts] == [-2, 1]

    def test_round_trip(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        x = direct_sum(proj_resolution(a4, Interval(2, 3)), proj_resolution(a4, Interval(2, 2)))
        parts = decompose(x, settings)
        assert sum(m for _, m in parts) == 2
        summands = [c for c, m in parts for _ in range(m)]
        assert is_isomorphic_k(direct_sum(*summands), x, settings)

    def test_split_that_loses_the_differential_raises(
        self, a4: NakayamaAlgebra, settings: Settings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        # same summand labels as P2 -> P4, but the two stalks are not a splitting of it
        x = build_complex(a4, "P", {0: [2], 1: [4]}, {0: [[1]]})
        stalks = [build_complex(a4, "P", {0: [2]}), build_complex(a4, "P", {1: [4]})]
        monkeypatch.setattr(endomorphisms, "_split", lambda *args: stalks)
        with pytest.raises(DecompositionFailure, match="homotopy equivalent"):
            decompose(x, settings)


class TestIsomorphism:
    def test_scalar_change(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        x = build_complex(a4, "P", {0: [2], 1: [4]}, {0: [[1]]})
        y = build_complex(a4, "P", {0: [2], 1: [4]}, {0: [[7]]})
        assert is_isomorphic_k(x, y, settings)

    def test_shift_breaks_isomorphism(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        x = proj_resolution(a4, Interval(2, 2))
        assert not is_isomorphic_k(x, shift(x, 1), settings)

    def test_same_terms_different_maps(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        x = build_complex(a4, "P", {0: [2], 1: [4]}, {0: [[1]]})
        y = build_complex(a4, "P", {0: [2], 1: [4]})
        assert not is_isomorphic_k(x, y, settings)

    def test_across_kinds(self, a4: NakayamaAlgebra, settings: Settings) -> None:
        module = Interval(2, 3)
        assert is_isomorphic_k(stalk_complex(a4, module), proj_resolution(a4, module), settings)
        assert is_isomorphic_k(inj_resolution(a4, module), proj_resolution(a4, module), settings)

    def test_exact_fallback(self, a4: NakayamaAlgebra) -> None:
        no_trials = Settings(_env_file=None, iso_trials=0)
        x = proj_resolution(a4, Interval(3, 4))
        assert is_isomorphic_k(x, x, no_trials)
        assert not is_isomorphic_k(x, proj_resolution(a4, Interval(2, 4)), no_trials)

    def test_different_algebras(self, a4: NakayamaAlgebra) -> None:
        with pytest.raises(KindMismatch):
            is_isomorphic_k(build_complex(a4, "P", {0: [1]}), build_complex(hereditary(4), "P", {0: [1]}))


class TestLp:
    def test_counts_minimal_summands(self, a4: NakayamaAlgebra) -> None:
        assert l_p(proj_resolution(a4, Interval(3, 4))) == 3
        assert l_p(build_complex(a4, "P", {0: [1, 3], 1: [3]}, {0: [[1, 1]]})) == 1

    def test_projective_only(self, a4: NakayamaAlgebra) -> None:
        with pytest.raises(WrongKind):
            l_p(inj_resolution(a4, Interval(2, 2)))
