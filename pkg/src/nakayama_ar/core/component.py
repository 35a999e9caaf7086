"""Knitting AR components of D^b(A) and reading off their tree class.

Vertices are tracked modulo the shift: a *class* is a minimal complex of projectives, and the
vertex ``(c, s)`` is ``classes[c][s]``. Mesh arrows and tau are stored on classes with the
shift that relates the two ends.
"""

import heapq
import math
from collections import defaultdict
from dataclasses import dataclass, field

import networkx as nx

from nakayama_ar.core.algebra import Interval, NakayamaAlgebra
from nakayama_ar.core.ar import AREngine
from nakayama_ar.core.complexes import Complex, canonical_form, shift
from nakayama_ar.core.endomorphisms import is_isomorphic_k, l_p
from nakayama_ar.errors import BudgetExceeded, ComponentOpen
from nakayama_ar.metrics import MetricsExporter
from nakayama_ar.models import ComponentReport, OrbitReport
from nakayama_ar.naming import Namer
from nakayama_ar.utils import get_logger

logger = get_logger(__name__)

Vertex = tuple[int, int]
Orbit = tuple[int, int]


@dataclass(frozen=True)
class StripEvent:
    """Contractible summands stripped from the triangle ending in ``end``."""

    end: Vertex
    start: Vertex
    stripped: tuple[tuple[Interval, int], ...]


@dataclass(frozen=True)
class TauCycle:
    """Classes visited by tau until it returns to the first one.

    ``offsets[j]`` is the shift with tau^j(root) = classes[members[j]][offsets[j]], and
    tau^len(members)(root) = root[total_shift].
    """

    members: tuple[int, ...]
    offsets: tuple[int, ...]
    total_shift: int

    @property
    def orbit_count(self) -> int:
        return abs(self.total_shift)


@dataclass
class Component:
    """A (possibly partial) AR component."""

    algebra: NakayamaAlgebra
    classes: list[Complex] = field(default_factory=list)
    generation: list[int] = field(default_factory=list)
    arrows: dict[tuple[int, int, int], int] = field(default_factory=dict)
    tau_of: dict[int, Vertex] = field(default_factory=dict)
    tau_inv_of: dict[int, Vertex] = field(default_factory=dict)
    strip_events: list[StripEvent] = field(default_factory=list)
    triangles: int = 0
    closed: bool = False

    def vertex(self, v: Vertex) -> Complex:
        c, s = v
        return canonical_form(shift(self.classes[c], s))

    def predecessors(self, c: int) -> list[tuple[Vertex, int]]:
        """Arrows into classes[c] as ((class, shift), multiplicity)."""
        return sorted(((d, s), m) for (d, s, target), m in self.arrows.items() if target == c)

    def l_p(self, c: int) -> int:
        return l_p(self.classes[c])

    def tau_cycles(self) -> list[TauCycle]:
        seen: set[int] = set()
        cycles = []
        for root in range(len(self.classes)):
            if root in seen or root not in self.tau_of:
                continue
            members, offsets = [], []
            current, offset = root, 0
            while current not in members and current in self.tau_of:
                members.append(current)
                offsets.append(offset)
                target, s = self.tau_of[current]
                offset += s
                current = target
            seen.update(members)
            if current != root:
                continue
            cycles.append(TauCycle(tuple(members), tuple(offsets), offset))
        return cycles

    def orbit_of(self, v: Vertex, cycles: list[TauCycle] | None = None) -> Orbit | None:
        """The tau-orbit (cycle index, residue) containing a vertex."""
        c, t = v
        for index, cycle in enumerate(cycles if cycles is not None else self.tau_cycles()):
            if c in cycle.members and cycle.total_shift:
                sigma = cycle.offsets[cycle.members.index(c)]
                return index, (t - sigma) % abs(cycle.total_shift)
        return None


def _identify(
    component: Component, complex_: Complex, window: int, generation: int
) -> tuple[Vertex, bool]:
    """Match against known classes up to shift, or register a new class."""
    found = locate(component, complex_)
    if found is not None and abs(found[1]) <= window:
        return found, False
    component.classes.append(complex_)
    component.generation.append(generation)
    return (len(component.classes) - 1, 0), True


def locate(component: Component, complex_: Complex) -> Vertex | None:
    """The vertex of a known class isomorphic to ``complex_``, if any."""
    signature = complex_.relative_signature()
    for c, rep in enumerate(component.classes):
        if rep.relative_signature() == signature:
            s = rep.min_degree - complex_.min_degree
            if is_isomorphic_k(complex_, shift(rep, s)):
                return c, s
    return None


def build_component(engine: AREngine, start: Complex, budget: int | None = None) -> Component:
    """Knit the component of ``start`` breadth-first.

    Every class gets its AR triangle (arrows in, tau) and its tau^-1; new classes are explored
    by generation, then by descriptor.

    Raises:
        BudgetExceeded: More than ``budget`` triangles would be needed; ``partial`` holds the
            component built so far
    """
    settings = engine.settings
    budget = budget if budget is not None else settings.knit_budget
    window = settings.shift_window
    component = Component(engine.algebra)
    (first, _), _ = _identify(component, engine.normalize(start), window, 0)
    frontier = [(0, str(component.classes[first]), first)]

    def register(complex_: Complex, generation: int) -> Vertex:
        vertex, new = _identify(component, complex_, window, generation)
        if new:
            c = vertex[0]
            heapq.heappush(frontier, (generation, str(component.classes[c]), c))
        return vertex

    while frontier:
        generation, _, c = heapq.heappop(frontier)
        if component.triangles >= budget:
            logger.warning("component.budget_exceeded", budget=budget, classes=len(component.classes))
            raise BudgetExceeded(f"component not closed after {budget} triangles", partial=component)
        rep = component.classes[c]
        triangle = engine.triangle_ending(rep)
        component.triangles += 1
        for summand, multiplicity in triangle.middle:
            d, s = register(summand, generation + 1)
            component.arrows[d, s, c] = component.arrows.get((d, s, c), 0) + multiplicity
        component.tau_of[c] = register(triangle.start, generation + 1)
        component.tau_inv_of[c] = register(engine.tau(rep, inverse=True), generation + 1)
        if triangle.stripped:
            component.strip_events.append(
                StripEvent((c, 0), component.tau_of[c], tuple(triangle.stripped))
            )

    component.closed = True
    MetricsExporter.record_component(engine.algebra.label, len(component.classes))
    logger.info(
        "component.closed",
        classes=len(component.classes),
        triangles=component.triangles,
        strips=len(component.strip_events),
    )
    return component


def orbit_graph(component: Component) -> nx.Graph:
    """Graph on tau-orbits with an edge for every mesh arrow between them."""
    cycles = component.tau_cycles()
    graph = nx.Graph()
    periods = [cycle.orbit_count for cycle in cycles if cycle.orbit_count]
    for index, cycle in enumerate(cycles):
        for r in range(cycle.orbit_count):
            graph.add_node((index, r))
    span = math.lcm(*periods) if periods else 1
    for (d, s, c), _ in component.arrows.items():
        for t in range(span):
            source = component.orbit_of((d, s + t), cycles)
            target = component.orbit_of((c, t), cycles)
            if source is not None and target is not None and source != target:
                graph.add_edge(source, target)
    return graph


def tree_class(graph: nx.Graph) -> str:
    """Dynkin type of an orbit graph, or ``inconclusive``."""
    m = graph.number_of_nodes()
    if m == 0 or not nx.is_tree(graph):
        return "inconclusive"
    degrees = dict(graph.degree())
    if max(degrees.values(), default=0) <= 2:
        return f"A{m}"
    branching = [v for v, d in degrees.items() if d >= 3]
    if len(branching) != 1 or degrees[branching[0]] != 3:
        return "inconclusive"
    rest = graph.copy()
    rest.remove_node(branching[0])
    arms = sorted(len(part) for part in nx.connected_components(rest))
    if arms[0] == 1 and arms[1] == 1:
        return f"D{m}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{m}"
    return "inconclusive"


def shift_power(component: Component) -> int | None:
    """k with [-1] = tau^k on the whole component, when every orbit is fixed by the shift."""
    powers = set()
    for cycle in component.tau_cycles():
        if cycle.total_shift == -1:
            powers.add(len(cycle.members))
        elif cycle.total_shift == 1:
            powers.add(-len(cycle.members))
        else:
            return None
    return powers.pop() if len(powers) == 1 else None


def shift_action(component: Component) -> dict[Orbit, Orbit]:
    """Image of every tau-orbit under [-1]."""
    action = {}
    for index, cycle in enumerate(component.tau_cycles()):
        period = cycle.orbit_count
        for r in range(period):
            action[index, r] = (index, (r - 1) % period)
    return action


def component_report(component: Component, namer: Namer | None = None) -> ComponentReport:
    """Orbit table, shift action and tree class of a closed component."""
    if not component.closed:
        raise ComponentOpen("component is not closed under the shift")
    namer = namer or Namer(component.algebra)
    cycles = component.tau_cycles()
    graph = orbit_graph(component)
    action = shift_action(component)

    def label(orbit: Orbit) -> str:
        index, r = orbit
        return namer.name(component.vertex((cycles[index].members[0], r)))

    orbits = [
        OrbitReport(
            label=label((index, r)),
            cycle=index,
            residue=r,
            tau_period=len(cycle.members),
            shift=cycle.total_shift,
            shift_image=label(action[index, r]),
            valency=graph.degree((index, r)),
        )
        for index, cycle in enumerate(cycles)
        for r in range(cycle.orbit_count)
    ]
    return ComponentReport(
        algebra=component.algebra.label,
        closed=component.closed,
        classes=len(component.classes),
        triangles=component.triangles,
        orbit_count=graph.number_of_nodes(),
        orbits=orbits,
        valencies=sorted((d for _, d in graph.degree()), reverse=True),
        verdict=tree_class(graph),
        shift_power=shift_power(component),
        shift_fixes_orbits=all(a == b for a, b in action.items()),
        strip_events=[namer.name(component.vertex(e.start)) for e in component.strip_events],
    )


def export_dot(component: Component, namer: Namer | None = None) -> str:
    """DOT text: solid mesh arrows labelled by multiplicity, dashed tau-edges X -> tau X.

    Node identifiers are complex descriptors, so every node parses back into a complex.
    """
    namer = namer or Namer(component.algebra)
    nodes: dict[str, str] = {}
    lines = [f'digraph "{component.algebra.label}" {{', "\trankdir=LR;"]

    def node(v: Vertex) -> str:
        complex_ = component.vertex(v)
        key = str(complex_)
        if key not in nodes:
            nodes[key] = namer.name(complex_)
        return key

    edges = []
    for (d, s, c), multiplicity in sorted(component.arrows.items()):
        source, target = node((d, s)), node((c, 0))
        attrs = f' [label="{multiplicity}"]' if multiplicity > 1 else ""
        edges.append(f'\t"{source}" -> "{target}"{attrs};')
    for c, v in sorted(component.tau_of.items()):
        edges.append(f'\t"{node((c, 0))}" -> "{node(v)}" [style=dashed];')
    for key, alias in nodes.items():
        text = alias if alias == key else f"{alias}\\n{key}"
        lines.append(f'\t"{key}" [label="{text}"];')
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def arrows_into(component: Component) -> dict[int, int]:
    """Number of arrows (with multiplicity) ending at each class."""
    counts: dict[int, int] = defaultdict(int)
    for (_, _, c), m in component.arrows.items():
        counts[c] += m
    return dict(counts)
