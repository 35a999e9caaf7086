"""Minimal resolutions, syzygies, homological dimensions and the Nakayama functor on modules."""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from nakayama_ar.core.algebra import CanonicalMap, Interval, Module, NakayamaAlgebra
from nakayama_ar.core.complexes import (
    ChainMap,
    Complex,
    ComplexKind,
    build_complex,
    direct_sum,
    shift,
    stalk_complex,
)
from nakayama_ar.errors import WrongKind
from nakayama_ar.utils import get_logger, linalg
from nakayama_ar.utils.linalg import Matrix

logger = get_logger(__name__)


class Side(str, Enum):
    PROJECTIVE = "proj"
    INJECTIVE = "inj"


@dataclass(frozen=True, eq=False)
class Resolution:
    """Minimal projective or injective resolution of an indecomposable.

    Attributes:
        target: The resolved module
        side: ``proj`` (degrees <= 0) or ``inj`` (degrees >= 0)
        complex: The resolution as a complex
        augmentation: P -> M for projective, M -> I for injective resolutions
    """

    target: Interval
    side: Side
    complex: Complex
    augmentation: ChainMap

    @property
    def terms(self) -> list[Interval]:
        """Terms starting at degree 0 and moving away from it."""
        degrees = sorted(self.complex.terms, reverse=self.side is Side.PROJECTIVE)
        return [self.complex.terms[k][0] for k in degrees]

    @property
    def length(self) -> int:
        return len(self.complex.terms) - 1


def syzygy(algebra: NakayamaAlgebra, module: Module, inverse: bool = False) -> Module:
    """Kernel of the projective cover, or with ``inverse`` the cokernel of the injective envelope."""
    if module is None:
        return None
    module = algebra.check(module)
    if inverse:
        hi = module.lo + algebra.inj_len[module.lo - 1] - 1
        return Interval(module.hi + 1, hi) if module.hi + 1 <= hi else None
    lo = module.hi - algebra.proj_len[module.hi - 1] + 1
    return Interval(lo, module.lo - 1) if lo <= module.lo - 1 else None


def resolution(algebra: NakayamaAlgebra, module: Module, side: Side | str = Side.PROJECTIVE) -> Resolution:
    """Minimal resolution by iterated syzygies."""
    module = algebra.check(module)
    side = Side(side)
    one = ((Fraction(1),),)
    terms: dict[int, list[int]] = {}
    current: Module = module
    degree = 0
    step = -1 if side is Side.PROJECTIVE else 1
    while current is not None:
        terms[degree] = [current.hi if side is Side.PROJECTIVE else current.lo]
        current = syzygy(algebra, current, inverse=side is Side.INJECTIVE)
        degree += step
    kind = ComplexKind.PROJECTIVE if side is Side.PROJECTIVE else ComplexKind.INJECTIVE
    diffs = {k: one for k in terms if k + 1 in terms}
    complex_ = build_complex(algebra, kind, terms, diffs)
    stalk = stalk_complex(algebra, module)
    if side is Side.PROJECTIVE:
        augmentation = ChainMap(complex_, stalk, {0: one})
    else:
        augmentation = ChainMap(stalk, complex_, {0: one})
    return Resolution(module, side, complex_, augmentation)


def proj_resolution(algebra: NakayamaAlgebra, module: Module) -> Complex:
    """The complex pM, concentrated in degrees <= 0."""
    return resolution(algebra, module, Side.PROJECTIVE).complex


def inj_resolution(algebra: NakayamaAlgebra, module: Module) -> Complex:
    """The complex iM, concentrated in degrees >= 0."""
    return resolution(algebra, module, Side.INJECTIVE).complex


def projective_cover_resolution(
    algebra: NakayamaAlgebra, modules: Sequence[Interval], degree: int
) -> tuple[Complex, Matrix]:
    """Resolution of a direct sum placed in ``degree``.

    Returns:
        The projective complex and the matrix of the augmentation in ``degree`` (rows: the given
        summands, columns: the projective covers)
    """
    pieces = [shift(proj_resolution(algebra, m), -degree) for m in modules]
    total = direct_sum(*pieces)
    cover = linalg.identity(len(modules))
    return total, cover


def homological_dims(algebra: NakayamaAlgebra, module: Module) -> tuple[int, int]:
    """(projective dimension, injective dimension) of an indecomposable."""
    return (
        resolution(algebra, module, Side.PROJECTIVE).length,
        resolution(algebra, module, Side.INJECTIVE).length,
    )


def global_dimension(algebra: NakayamaAlgebra) -> int:
    return max(resolution(algebra, m).length for m in algebra.indecomposables())


def gdim_bound(algebra: NakayamaAlgebra) -> int:
    """One more than the largest set of relations in which every path overlaps another.

    Two relation paths overlap when they share an arrow. A lone relation counts as a set of size
    one, so any nonempty relation set gives at least 2.
    """
    relations = algebra.relations
    if not relations:
        return 1
    overlapping = [
        a for a in relations if any(b != a and min(a[1], b[1]) - max(a[0], b[0]) >= 1 for b in relations)
    ]
    return max(len(overlapping), 1) + 1


def nakayama_module(algebra: NakayamaAlgebra, module: Interval, inverse: bool = False) -> Interval:
    """nu(P_i) = I_i, or with ``inverse`` nu^-1(I_i) = P_i."""
    if inverse:
        if not algebra.is_injective(module):
            raise WrongKind(f"{module} is not injective")
        return algebra.projective(module.lo)
    if not algebra.is_projective(module):
        raise WrongKind(f"{module} is not projective")
    return algebra.injective(module.hi)


def nakayama_map(algebra: NakayamaAlgebra, f: CanonicalMap, inverse: bool = False) -> CanonicalMap:
    """The Nakayama functor on a canonical map; the scalar is kept."""
    return CanonicalMap(
        nakayama_module(algebra, f.src, inverse),
        nakayama_module(algebra, f.dst, inverse),
        f.scalar,
    )
