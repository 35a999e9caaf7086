"""Tests for module aliases, the expression syntax and complex names."""

import pytest

from nakayama_ar.core.algebra import Interval, NakayamaAlgebra, create_algebra
from nakayama_ar.core.complexes import ComplexKind, nu_complex, shift
from nakayama_ar.core.endomorphisms import is_isomorphic_k
from nakayama_ar.core.homalg import inj_resolution, proj_resolution
from nakayama_ar.core.resolve import projectivize
from nakayama_ar.errors import ExpressionSyntaxError, IndexOutOfRange, InvalidModule, UnknownAlias
from nakayama_ar.naming import Namer, module_name, parse_expression, parse_module


class TestModuleNames:
    def test_alias_preference(self, a4: NakayamaAlgebra) -> None:
        # P3 = I1 and S4 = I4: projective wins, then injective
        assert module_name(a4, Interval(1, 3)) == "P3"
        assert module_name(a4, Interval(4, 4)) == "I4"
        assert module_name(a4, Interval(3, 4)) == "I3"
        assert module_name(a4, Interval(2, 2)) == "S2"
        assert module_name(a4, Interval(2, 3)) == "M"

    def test_literal_outside_worked_example(self, zdn5: NakayamaAlgebra) -> None:
        assert module_name(zdn5, Interval(2, 3)) == "[2,3]"

    def test_parse(self, a4: NakayamaAlgebra) -> None:
        assert parse_module(a4, "P4") == Interval(2, 4)
        assert parse_module(a4, "I3") == Interval(3, 4)
        assert parse_module(a4, " M ") == Interval(2, 3)
        assert parse_module(a4, "[1,2]") == Interval(1, 2)

    def test_parse_errors(self, a4: NakayamaAlgebra, zan3: NakayamaAlgebra) -> None:
        with pytest.raises(UnknownAlias):
            parse_module(zan3, "M")
        with pytest.raises(UnknownAlias):
            parse_module(a4, "Q2")
        with pytest.raises(UnknownAlias):
            parse_module(a4, "[3,2]")
        with pytest.raises(IndexOutOfRange):
            parse_module(a4, "[5,5]")
        with pytest.raises(InvalidModule):
            parse_module(a4, "[1,4]")

    def test_m_alias_follows_relations_not_name(self) -> None:
        impostor = create_algebra(4, [], name="a4gamma")
        with pytest.raises(UnknownAlias):
            parse_module(impostor, "M")
        assert module_name(impostor, Interval(2, 3)) == "[2,3]"
        renamed = create_algebra(4, [(1, 4)], name="gamma")
        assert parse_module(renamed, "M") == Interval(2, 3)
        assert module_name(renamed, Interval(2, 3)) == "M"

    @pytest.mark.parametrize("text", ["Q2", "[3,2]", "P"])
    def test_malformed_is_a_syntax_error(self, a4: NakayamaAlgebra, text: str) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_module(a4, text)


class TestExpressions:
    def test_shifted_module(self, a4: NakayamaAlgebra) -> None:
        x = parse_expression(a4, "S2[-1]")
        assert is_isomorphic_k(x, shift(proj_resolution(a4, Interval(2, 2)), -1))

    def test_literal_with_shift(self, a4: NakayamaAlgebra) -> None:
        x = parse_expression(a4, "[2,3][2]")
        assert x.kind is ComplexKind.PROJECTIVE
        assert is_isomorphic_k(x, shift(proj_resolution(a4, Interval(2, 3)), 2))

    def test_functors(self, a4: NakayamaAlgebra) -> None:
        x = parse_expression(a4, "nu(S2)[-1]")
        assert x.kind is ComplexKind.INJECTIVE
        assert str(x) == str(shift(nu_complex(proj_resolution(a4, Interval(2, 2))), -1))
        y = parse_expression(a4, "nu^-1(S3)")
        assert y.kind is ComplexKind.PROJECTIVE
        assert is_isomorphic_k(x, y)

    def test_descriptor(self, a4: NakayamaAlgebra) -> None:
        assert str(parse_expression(a4, "0:{P2} 1:{P4} d0=[1]")) == "0:{P2} 1:{P4} d0=[1]"
        assert parse_expression(a4, "0").is_zero

    def test_garbage(self, a4: NakayamaAlgebra) -> None:
        with pytest.raises(UnknownAlias):
            parse_expression(a4, "tau(S2)")


class TestNamer:
    def test_shifted_stalks(self, a4: NakayamaAlgebra) -> None:
        namer = Namer(a4)
        assert namer.name(shift(proj_resolution(a4, Interval(2, 2)), -1)) == "S2[-1]"
        assert namer.name(proj_resolution(a4, Interval(2, 3))) == "M"
        assert namer.name(inj_resolution(a4, Interval(4, 4))) == "I4"

    def test_functor_names(self, a4: NakayamaAlgebra) -> None:
        namer = Namer(a4)
        assert namer.name(projectivize(parse_expression(a4, "nu(S2)[-1]"))) == "nu(S2)[-1]"

    def test_zero(self, a4: NakayamaAlgebra) -> None:
        assert Namer(a4).name(parse_expression(a4, "0")) == "0"

    def test_stalk_detection(self, a4: NakayamaAlgebra) -> None:
        namer = Namer(a4)
        assert namer.stalk(shift(proj_resolution(a4, Interval(3, 3)), 2)) == (Interval(3, 3), -2)
        assert namer.stalk(parse_expression(a4, "0:{P2} 1:{P4} d0=[1]")) is None
