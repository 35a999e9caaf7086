"""Tests for knitting components and classifying their orbit graphs."""

import dataclasses
import re

import networkx as nx
import pytest

from nakayama_ar.config import Settings
from nakayama_ar.core.algebra import NakayamaAlgebra
from nakayama_ar.core.ar import AREngine, create_engine
from nakayama_ar.core.complexes import parse_descriptor
from nakayama_ar.core.component import (
    Component,
    arrows_into,
    build_component,
    component_report,
    export_dot,
    locate,
    orbit_graph,
    shift_power,
    tree_class,
)
from nakayama_ar.core.endomorphisms import is_isomorphic_k
from nakayama_ar.core.verify import simple_in_degrees
from nakayama_ar.errors import BudgetExceeded, ComponentOpen


@pytest.fixture(scope="module")
def d4_component(engine: AREngine, a4: NakayamaAlgebra, stalk) -> Component:
    return build_component(engine, stalk(a4, 1, 1))


class TestTreeClass:
    def test_path(self) -> None:
        assert tree_class(nx.path_graph(4)) == "A4"
        assert tree_class(nx.path_graph(1)) == "A1"

    def test_star(self) -> None:
        assert tree_class(nx.star_graph(3)) == "D4"

    def test_long_d(self) -> None:
        graph = nx.path_graph(5)
        graph.add_edge(3, 5)
        assert tree_class(graph) == "D6"

    def test_e6(self) -> None:
        graph = nx.Graph([(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
        assert tree_class(graph) == "E6"

    def test_inconclusive(self) -> None:
        assert tree_class(nx.cycle_graph(4)) == "inconclusive"
        assert tree_class(nx.Graph()) == "inconclusive"
        # three arms of length two is not a Dynkin diagram
        graph = nx.Graph([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert tree_class(graph) == "inconclusive"
        assert tree_class(nx.star_graph(4)) == "inconclusive"


@pytest.mark.slow
class TestWorkedExampleComponent:
    def test_closes_with_d4_shape(self, d4_component: Component) -> None:
        report = component_report(d4_component)
        assert report.closed
        assert report.orbit_count == 4
        assert report.verdict == "D4"
        assert report.valencies == [3, 1, 1, 1]
        assert report.classes == 12

    def test_shift_is_a_tau_power(self, d4_component: Component) -> None:
        assert shift_power(d4_component) == 3
        assert component_report(d4_component).shift_fixes_orbits

    def test_orbit_graph_matches_report(self, d4_component: Component) -> None:
        graph = orbit_graph(d4_component)
        assert nx.is_tree(graph)
        assert graph.number_of_nodes() == 4

    def test_every_class_has_predecessors(self, d4_component: Component) -> None:
        counts = arrows_into(d4_component)
        assert set(counts) == set(range(len(d4_component.classes)))
        assert max(counts.values()) == 3

    def test_simple_in_degrees(self, d4_component: Component, a4: NakayamaAlgebra, stalk) -> None:
        simples = [None] + [stalk(a4, i, i) for i in range(1, 5)]
        assert simple_in_degrees(d4_component, simples) == (True, "")

        vertex = locate(d4_component, simples[3])
        assert vertex is not None
        arrows = {key: m for key, m in d4_component.arrows.items() if key[2] != vertex[0]}
        broken = dataclasses.replace(d4_component, arrows=arrows)
        assert simple_in_degrees(broken, simples) == (False, "S3: 0 arrows in, 1 predicted")

    def test_locate_up_to_shift(self, d4_component: Component, a4: NakayamaAlgebra, stalk) -> None:
        vertex = locate(d4_component, stalk(a4, 2, 3, 5))
        assert vertex is not None
        assert is_isomorphic_k(d4_component.vertex(vertex), stalk(a4, 2, 3, 5))

    def test_dot_export(self, d4_component: Component, a4: NakayamaAlgebra) -> None:
        dot = export_dot(d4_component)
        assert dot.startswith("digraph")
        assert "style=dashed" in dot
        nodes = re.findall(r'^\t"([^"]+)" \[label=', dot, flags=re.MULTILINE)
        assert len(nodes) >= 12
        for descriptor in nodes:
            assert str(parse_descriptor(a4, descriptor)) == descriptor


class TestKnittingLimits:
    def test_budget(self, a4: NakayamaAlgebra, settings: Settings, stalk) -> None:
        engine = create_engine(a4, settings)
        with pytest.raises(BudgetExceeded) as info:
            build_component(engine, stalk(a4, 1, 1), budget=1)
        partial = info.value.partial
        assert partial.triangles == 1
        assert not partial.closed
        with pytest.raises(ComponentOpen):
            component_report(partial)

    def test_radsquare_is_a_line(self, zan3: NakayamaAlgebra, settings: Settings, stalk) -> None:
        engine = create_engine(zan3, settings)
        report = component_report(build_component(engine, stalk(zan3, 1, 1)))
        assert report.verdict == "A3"
        assert report.orbit_count == 3
