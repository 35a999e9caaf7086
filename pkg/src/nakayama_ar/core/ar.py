"""Auslander-Reiten triangles in the bounded derived category.

For an indecomposable Z in K^b(proj) the triangle ending in Z is

    ν(Z)[-1] -> cone(w)[-1] -> Z --w--> ν(Z)

where w spans the socle of Hom(Z, ν(Z)) as a right End(Z)-module, so tau = ν[-1].
"""

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from nakayama_ar.config import Settings, get_settings
from nakayama_ar.core.algebra import CanonicalMap, Interval, NakayamaAlgebra
from nakayama_ar.core.complexes import (
    ChainMap,
    Complex,
    ComplexKind,
    build_complex,
    canonical_form,
    compose_maps,
    cone,
    direct_sum,
    homology,
    nu_complex,
    nu_inv_complex,
    shift,
    zero_complex,
)
from nakayama_ar.core.endomorphisms import decompose, end_algebra
from nakayama_ar.core.homalg import homological_dims, inj_resolution, proj_resolution, syzygy
from nakayama_ar.core.homotopy import hom_spaces, minimize
from nakayama_ar.core.resolve import injectivize, projectivize
from nakayama_ar.errors import (
    HomViolation,
    NotApplicable,
    NotIndecomposable,
    SocleDimensionError,
    WrongKind,
    ZeroMap,
)
from nakayama_ar.metrics import MetricsExporter
from nakayama_ar.utils import get_logger, linalg
from nakayama_ar.utils.linalg import ZERO

logger = get_logger(__name__)


def as_projective(complex_: Complex) -> Complex:
    """Canonical minimal complex of projectives representing ``complex_`` in D^b."""
    if complex_.kind is ComplexKind.PROJECTIVE:
        return canonical_form(minimize(complex_).complex)
    return projectivize(complex_)


@dataclass(frozen=True, eq=False)
class ARTriangle:
    """tau Z -> E -> Z -> ν(Z) with E decomposed.

    Attributes:
        end: Z, minimal complex of projectives
        connecting: w: Z -> Q where Q is the projective model of ν(Z)
        start: tau Z = Q[-1]
        middle: Indecomposable summands of E with multiplicities
        middle_complex: The minimal complex E
        stripped: Contractible summands removed from cone(w)[-1], as (summand, degree)
    """

    end: Complex
    connecting: ChainMap
    start: Complex
    middle: tuple[tuple[Complex, int], ...]
    middle_complex: Complex
    stripped: tuple[tuple[Interval, int], ...]

    @property
    def predecessor_count(self) -> int:
        return sum(m for _, m in self.middle)


def connecting_map(complex_: Complex, target: Complex | None = None) -> ChainMap:
    """The map w: X -> ν(X) killed by every radical endomorphism of X.

    Args:
        complex_: Indecomposable minimal complex of projectives
        target: ν(X) or any complex isomorphic to it; defaults to ``nu_complex(X)``

    Returns:
        A representative of the unique class up to scalar, normalized so its first nonzero
        coordinate is 1

    Raises:
        NotIndecomposable: End_K(X) is not local
        SocleDimensionError: The solution space is not one-dimensional
    """
    if complex_.kind is not ComplexKind.PROJECTIVE:
        raise WrongKind("connecting maps start at a complex of projectives")
    if complex_.is_zero:
        raise NotIndecomposable("the zero complex has no AR triangle")
    endo = end_algebra(complex_)
    if not endo.is_local:
        raise NotIndecomposable(f"{complex_} is decomposable")
    target = nu_complex(complex_) if target is None else target

    space = hom_spaces(complex_, target)
    classes = space.class_maps()
    radical = [endo.element(r) for r in endo.radical]
    equations: list[list[Fraction]] = []
    for f in radical:
        images = [space.reduce(compose_maps(g, f)) for g in classes]
        for t in range(space.dimension):
            equations.append([image[t] for image in images])
    solutions = linalg.nullspace(equations, space.dimension) if space.dimension else []
    if len(solutions) != 1:
        raise SocleDimensionError(
            f"expected a one-dimensional socle for {complex_}, found {len(solutions)}"
        )
    coords = solutions[0]
    lead = next(x for x in coords if x)
    coords = tuple(x / lead for x in coords)

    vector = [ZERO] * len(space.positions)
    for c, cls in zip(coords, space.classes):
        if c:
            vector = [v + c * x for v, x in zip(vector, cls)]
    w = space.to_map(vector)
    for f in radical:
        assert space.is_null_homotopic(compose_maps(w, f)), "w o rad End(X) must vanish"
    return w


class AREngine:
    """Triangle and tau computations over one algebra, cached by descriptor."""

    def __init__(self, algebra: NakayamaAlgebra, settings: Settings | None = None) -> None:
        """Initialize engine.

        Args:
            algebra: Base algebra
            settings: Engine settings, defaults to the cached environment settings
        """
        self.algebra = algebra
        self.settings = settings or get_settings()
        self._triangles: dict[str, ARTriangle] = {}
        self._tau: dict[tuple[str, bool], Complex] = {}

    def normalize(self, complex_: Complex) -> Complex:
        if complex_.algebra != self.algebra:
            raise WrongKind("complex over a different algebra")
        return as_projective(complex_)

    def triangle_ending(self, complex_: Complex) -> ARTriangle:
        """The AR triangle ending in ``complex_``."""
        end = self.normalize(complex_)
        key = str(end)
        if key in self._triangles:
            return self._triangles[key]

        started = time.perf_counter()
        nu_model = projectivize(nu_complex(end))
        w = connecting_map(end, nu_model)
        reduced = minimize(shift(cone(w), -1))
        middle_complex = canonical_form(reduced.complex)
        middle = tuple(decompose(middle_complex, self.settings))
        triangle = ARTriangle(
            end=end,
            connecting=w,
            start=canonical_form(shift(nu_model, -1)),
            middle=middle,
            middle_complex=middle_complex,
            stripped=reduced.stripped,
        )
        elapsed = time.perf_counter() - started
        MetricsExporter.record_triangle(self.algebra.label, elapsed, len(reduced.stripped))
        logger.debug(
            "triangle.built",
            end=key,
            middle=[str(m) for m, _ in middle],
            stripped=len(reduced.stripped),
            seconds=round(elapsed, 4),
        )
        self._triangles[key] = triangle
        return triangle

    def tau(self, complex_: Complex, inverse: bool = False) -> Complex:
        """tau = ν[-1], or tau^-1 = ν^-1[1] computed through the injective model."""
        end = self.normalize(complex_)
        key = (str(end), inverse)
        if key in self._tau:
            return self._tau[key]
        if inverse:
            result = as_projective(shift(nu_inv_complex(injectivize(end)), 1))
        elif str(end) in self._triangles:
            result = self._triangles[str(end)].start
        else:
            result = canonical_form(shift(projectivize(nu_complex(end)), -1))
        self._tau[key] = result
        return result

    def tau_power(self, complex_: Complex, power: int) -> Complex:
        """tau^power; negative powers apply tau^-1."""
        result = self.normalize(complex_)
        for _ in range(abs(power)):
            result = self.tau(result, inverse=power < 0)
        return result


def create_engine(algebra: NakayamaAlgebra, settings: Settings | None = None) -> AREngine:
    """Create an AR engine instance."""
    return AREngine(algebra, settings)


def ar_triangle_ending(complex_: Complex, settings: Settings | None = None) -> ARTriangle:
    return create_engine(complex_.algebra, settings).triangle_ending(complex_)


def tau(complex_: Complex, inverse: bool = False, settings: Settings | None = None) -> Complex:
    return create_engine(complex_.algebra, settings).tau(complex_, inverse)


def middle_homology(triangle: ARTriangle) -> dict[int, Counter[Interval]]:
    """Homology of the middle term."""
    return homology(triangle.middle_complex)


def _hom(algebra: NakayamaAlgebra, i: int, j: int) -> int:
    """hom_dim(I_i, I_j), zero when an index leaves 1..n."""
    if not (1 <= i <= algebra.n and 1 <= j <= algebra.n):
        return 0
    return algebra.hom_dim(algebra.injective(i), algebra.injective(j))


@dataclass(frozen=True, eq=False)
class PreConditions:
    """The three vanishing conditions for a module M = [a, b] and what they predict.

    Attributes:
        module: M
        conditions: Truth of conditions (1), (2), (3)
        candidates: The complexes (a) ν(p(ΩM)), (b) i(Ω^-1 M)[-1] and (c) I_a -> I_b
        predicted: Candidates that are forced summands of the middle term, contractible and zero
            ones removed
        expected_count: Number of indecomposable middle summands
    """

    module: Interval
    conditions: tuple[bool, bool, bool]
    candidates: tuple[Complex, Complex, Complex]
    predicted: tuple[Complex, ...]
    expected_count: int
    descriptions: tuple[str, ...] = field(default=())

    @property
    def holding(self) -> int:
        return sum(self.conditions)


def _nontrivial(complex_: Complex) -> bool:
    return not complex_.is_zero and not minimize(complex_).complex.is_zero


def pre_conditions(algebra: NakayamaAlgebra, module: Interval) -> PreConditions:
    """Evaluate the vanishing conditions on M and predict the middle of its AR triangle."""
    module = algebra.check(module)
    a, b = module.lo, module.hi
    pdim, idim = homological_dims(algebra, module)
    c1 = _hom(algebra, b - algebra.proj_len[b - 1], a) == 0 or pdim <= 1
    c2 = _hom(algebra, b, a + algebra.inj_len[a - 1]) == 0 or idim <= 1
    c3 = _hom(algebra, a - 1, b + 1) == 0 or pdim == 0 or idim == 0

    omega = syzygy(algebra, module)
    cosyzygy = syzygy(algebra, module, inverse=True)
    empty = zero_complex(algebra, ComplexKind.INJECTIVE)
    part_a = nu_complex(proj_resolution(algebra, omega)) if omega else empty
    part_b = shift(inj_resolution(algebra, cosyzygy), -1) if cosyzygy else empty
    part_c = build_complex(algebra, ComplexKind.INJECTIVE, {0: [a], 1: [b]}, {0: [[1]]})
    candidates = (part_a, part_b, part_c)
    names = (f"nu(p({omega}))", f"i({cosyzygy})[-1]", f"I{a} -> I{b}")

    conditions = (c1, c2, c3)
    if all(conditions):
        chosen = [0, 1, 2]
    elif sum(conditions) == 2:
        holding = tuple(i for i, c in enumerate(conditions) if c)
        chosen = [{(0, 2): 0, (1, 2): 1, (0, 1): 2}[holding]]
    else:
        chosen = []
    kept = [i for i in chosen if _nontrivial(candidates[i])]
    predicted = tuple(candidates[i] for i in kept)
    if all(conditions):
        expected = len(kept)
    elif chosen:
        expected = len(kept) + 1
    else:
        expected = 1
    return PreConditions(
        module=module,
        conditions=conditions,
        candidates=candidates,
        predicted=predicted,
        expected_count=expected,
        descriptions=tuple(names[i] for i in kept),
    )


@dataclass(frozen=True, eq=False)
class PredecessorInfo:
    """Closed-form predecessors of a simple or projective stalk complex."""

    which: str
    vertex: int
    count: int
    predecessors: tuple[Complex, ...]
    descriptions: tuple[str, ...]


def predecessor_info(algebra: NakayamaAlgebra, which: str, vertex: int) -> PredecessorInfo:
    """Predecessor count and names for S_i or P_i.

    Args:
        algebra: Base algebra
        which: ``simple`` or ``projective``
        vertex: The vertex i

    Raises:
        NotApplicable: S_i at the boundary, projective or injective; P_i with neither ν(P_i)
            projective nor P_i injective
    """
    if which == "simple":
        simple = algebra.simple(vertex)
        boundary = not 2 <= vertex <= algebra.n - 1
        if boundary or algebra.is_projective(simple) or algebra.is_injective(simple):
            raise NotApplicable(f"S{vertex} is a boundary, projective or injective simple")
        if _hom(algebra, vertex - 1, vertex + 1):
            return PredecessorInfo(which, vertex, 1, (), ("indecomposable middle term",))
        radical = Interval(algebra.projective(vertex).lo, vertex - 1)
        injective = algebra.injective(vertex)
        quotient = Interval(vertex + 1, injective.hi)
        first = nu_complex(proj_resolution(algebra, radical))
        second = shift(proj_resolution(algebra, quotient), -1)
        return PredecessorInfo(
            which,
            vertex,
            2,
            (first, second),
            (f"nu(p(rad P{vertex}))", f"p(I{vertex}/S{vertex})[-1]"),
        )
    if which == "projective":
        projective = algebra.projective(vertex)
        nu = algebra.injective(vertex)
        if algebra.is_projective(nu):
            complex_ = build_complex(
                algebra, ComplexKind.PROJECTIVE, {0: [vertex], 1: [nu.hi]}, {0: [[1]]}
            )
        elif algebra.is_injective(projective):
            complex_ = build_complex(
                algebra, ComplexKind.INJECTIVE, {0: [projective.lo], 1: [vertex]}, {0: [[1]]}
            )
        else:
            raise NotApplicable(f"nu(P{vertex}) is not projective and P{vertex} is not injective")
        return PredecessorInfo(which, vertex, 1, (complex_,), (f"P{vertex} -> nu(P{vertex})",))
    raise NotApplicable(f"unknown predecessor family {which!r}")


def _check_projective_map(algebra: NakayamaAlgebra, f: CanonicalMap) -> None:
    if not f.scalar:
        raise ZeroMap("p-irreducibility needs a nonzero map")
    if not (algebra.is_projective(f.src) and algebra.is_projective(f.dst)):
        raise WrongKind("p-irreducibility is defined between indecomposable projectives")
    if not f.src.maps_to(f.dst):
        raise HomViolation(f"Hom({f.src}, {f.dst}) = 0")


def p_irreducible(algebra: NakayamaAlgebra, f: CanonicalMap) -> bool:
    """True iff P_s -> P_t is the projective cover of rad P_t (so s = t - 1)."""
    _check_projective_map(algebra, f)
    s, t = f.src.hi, f.dst.hi
    return s == t - 1 and algebra.proj_len[t - 1] >= 2


def factors_through_projective(algebra: NakayamaAlgebra, f: CanonicalMap) -> bool:
    """Brute force: does P_s -> P_t factor through some P_u with s < u < t?"""
    _check_projective_map(algebra, f)
    s, t = f.src.hi, f.dst.hi
    for u in range(s + 1, t):
        middle = algebra.projective(u)
        if f.src.maps_to(middle) and middle.maps_to(f.dst):
            return True
    return False


def summand_total(triangle: ARTriangle) -> Complex:
    """The middle term reassembled from its summands."""
    parts = [c for c, m in triangle.middle for _ in range(m)]
    return direct_sum(*parts) if parts else zero_complex(triangle.end.algebra)
