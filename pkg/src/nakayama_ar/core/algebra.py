"""Linear Nakayama algebras kA_n/I and their interval modules.

Vertices are 1..n. The indecomposable projective P_i has top S_i and descending composition
factors, so it is the interval [i - c_i + 1, i]; the injective I_i is [i, i + r_i - 1]. Hom
between intervals is at most one-dimensional and nonzero exactly when a <= c <= b <= d.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from nakayama_ar.errors import (
    IndexOutOfRange,
    InvalidModule,
    NonComposable,
    QuotientTooLong,
    RedundantRelation,
    RelationOutOfRange,
    RelationTooShort,
    ZeroModule,
)
from nakayama_ar.utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class Interval:
    """Indecomposable module with socle S_lo and top S_hi.

    The zero module is represented by ``None`` wherever a module may vanish.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo},{self.hi}]")

    @property
    def length(self) -> int:
        """Composition length."""
        return self.hi - self.lo + 1

    def contains(self, vertex: int) -> bool:
        return self.lo <= vertex <= self.hi

    def maps_to(self, other: "Interval") -> bool:
        """Unchecked Hom formula: Hom(self, other) != 0."""
        return self.lo <= other.lo <= self.hi <= other.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


Module = Interval | None


class ModuleKind(str, Enum):
    """Named families of indecomposables."""

    PROJECTIVE = "P"
    INJECTIVE = "I"
    SIMPLE = "S"
    QUOTIENT = "quotient"


class ModuleParts(NamedTuple):
    radical: Module
    socle: Interval
    top: Interval


@dataclass(frozen=True)
class NakayamaAlgebra:
    """The algebra kA_n/I with I generated by the zero paths in ``relations``.

    Use :func:`create_algebra` to build validated instances.
    """

    n: int
    relations: tuple[tuple[int, int], ...]
    proj_len: tuple[int, ...]
    inj_len: tuple[int, ...]
    name: str = field(default="", compare=False)

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"module out of range: vertex {i} not in 1..{self.n}")

    def projective(self, i: int) -> Interval:
        self._check_vertex(i)
        return Interval(i - self.proj_len[i - 1] + 1, i)

    def injective(self, i: int) -> Interval:
        self._check_vertex(i)
        return Interval(i, i + self.inj_len[i - 1] - 1)

    def simple(self, i: int) -> Interval:
        self._check_vertex(i)
        return Interval(i, i)

    def quotient(self, i: int, t: int) -> Interval:
        """P_i / rad^t P_i."""
        self._check_vertex(i)
        if not 1 <= t <= self.proj_len[i - 1]:
            raise QuotientTooLong(f"P{i} has Loewy length {self.proj_len[i - 1]}, asked for {t}")
        return Interval(i - t + 1, i)

    def interval_module(self, kind: ModuleKind | str, i: int, t: int | None = None) -> Interval:
        """Indecomposable of the given family at vertex ``i``."""
        kind = ModuleKind(kind)
        if kind is ModuleKind.PROJECTIVE:
            return self.projective(i)
        if kind is ModuleKind.INJECTIVE:
            return self.injective(i)
        if kind is ModuleKind.SIMPLE:
            return self.simple(i)
        if t is None:
            raise QuotientTooLong("quotient modules need a length")
        return self.quotient(i, t)

    def is_valid(self, module: Interval) -> bool:
        """True when ``module`` is a module over this algebra."""
        if not 1 <= module.lo <= module.hi <= self.n:
            return False
        return module.length <= self.proj_len[module.hi - 1]

    def check(self, module: Module) -> Interval:
        """Return ``module`` if it is a nonzero valid module, raise otherwise."""
        if module is None:
            raise ZeroModule("operation undefined on the zero module")
        if not (1 <= module.lo and module.hi <= self.n):
            raise IndexOutOfRange(f"module out of range: {module} for n={self.n}")
        if not self.is_valid(module):
            raise InvalidModule(f"{module} contains a zero relation")
        return module

    def is_projective(self, module: Interval) -> bool:
        return self.check(module) == self.projective(module.hi)

    def is_injective(self, module: Interval) -> bool:
        return self.check(module) == self.injective(module.lo)

    def hom_dim(self, source: Module, target: Module) -> int:
        """Dimension of Hom(source, target), 0 or 1."""
        if source is None or target is None:
            return 0
        self.check(source)
        self.check(target)
        return int(source.maps_to(target))

    def module_parts(self, module: Module) -> ModuleParts:
        """Radical, socle and top of an indecomposable."""
        module = self.check(module)
        radical = Interval(module.lo, module.hi - 1) if module.length > 1 else None
        return ModuleParts(radical, Interval(module.lo, module.lo), Interval(module.hi, module.hi))

    def indecomposables(self) -> list[Interval]:
        """All indecomposable modules, ordered by top then socle."""
        return [
            Interval(hi - t + 1, hi)
            for hi in range(1, self.n + 1)
            for t in range(self.proj_len[hi - 1], 0, -1)
        ]

    @property
    def loewy_length(self) -> int:
        """Length of the longest indecomposable projective."""
        return max(self.proj_len)

    @property
    def label(self) -> str:
        return self.name or f"n={self.n} relations={list(self.relations)}"


@dataclass(frozen=True)
class CanonicalMap:
    """Scalar multiple of the canonical basis map src -> dst."""

    src: Interval
    dst: Interval
    scalar: Fraction = Fraction(1)


def _loewy_lengths(n: int, relations: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rels = list(relations)
    proj = []
    inj = []
    for i in range(1, n + 1):
        t = 1
        while t < i and not any(i - t <= u and v <= i for u, v in rels):
            t += 1
        proj.append(t)
        t = 1
        while t < n - i + 1 and not any(i <= u and v <= i + t for u, v in rels):
            t += 1
        inj.append(t)
    return tuple(proj), tuple(inj)


def create_algebra(
    n: int, relations: Iterable[Iterable[int]] = (), name: str | None = None
) -> NakayamaAlgebra:
    """Validate a relation set and compute the Kupisch data.

    Args:
        n: Number of vertices
        relations: Zero paths as vertex intervals [u, v] with v - u >= 2
        name: Optional display name

    Returns:
        The algebra with projective and injective Loewy lengths
    """
    if n < 1:
        raise IndexOutOfRange(f"vertex count must be positive, got {n}")
    rels: list[tuple[int, int]] = []
    for relation in relations:
        u, v = (int(x) for x in relation)
        if not (1 <= u <= n and 1 <= v <= n) or u > v:
            raise RelationOutOfRange(f"relation [{u},{v}] outside 1..{n}")
        if v - u < 2:
            raise RelationTooShort(f"relation [{u},{v}] has length {v - u} < 2")
        rels.append((u, v))
    rels = sorted(set(rels))
    for a in rels:
        for b in rels:
            if a != b and b[0] <= a[0] and a[1] <= b[1]:
                raise RedundantRelation(f"relation {list(b)} contains {list(a)}")

    proj_len, inj_len = _loewy_lengths(n, rels)
    algebra = NakayamaAlgebra(n, tuple(rels), proj_len, inj_len, name or "")
    logger.debug("algebra.created", n=n, relations=rels, proj_len=proj_len, inj_len=inj_len)
    return algebra


def compose_scalar(algebra: NakayamaAlgebra, f: CanonicalMap, g: CanonicalMap) -> CanonicalMap:
    """The composite g after f of canonical maps."""
    if f.dst != g.src:
        raise NonComposable(f"cannot compose {f.src}->{f.dst} with {g.src}->{g.dst}")
    epsilon = algebra.hom_dim(f.src, g.dst)
    return CanonicalMap(f.src, g.dst, f.scalar * g.scalar * epsilon)


@lru_cache(maxsize=None)
def opposite_algebra(algebra: NakayamaAlgebra) -> NakayamaAlgebra:
    """The opposite algebra, with vertex v renamed n + 1 - v."""
    n = algebra.n
    relations = [(n + 1 - v, n + 1 - u) for u, v in algebra.relations]
    name = algebra.name[:-3] if algebra.name.endswith("^op") else f"{algebra.name}^op"
    return create_algebra(n, relations, name if algebra.name else None)


def reflect(algebra: NakayamaAlgebra, module: Interval) -> Interval:
    """The vertex-reflected interval, the D-dual of ``module`` over the opposite algebra."""
    return Interval(algebra.n + 1 - module.hi, algebra.n + 1 - module.lo)


def a4gamma() -> NakayamaAlgebra:
    """A_4 with the single relation [1, 4]."""
    return create_algebra(4, [(1, 4)], name="a4gamma")


def radsquare(n: int) -> NakayamaAlgebra:
    """A_n modulo all paths of length two."""
    return create_algebra(n, [(i, i + 2) for i in range(1, n - 1)], name=f"radsquare:{n}")


def longrel(n: int) -> NakayamaAlgebra:
    """A_n modulo the single longest path."""
    return create_algebra(n, [(1, n)] if n >= 3 else [], name=f"longrel:{n}")


def hereditary(n: int) -> NakayamaAlgebra:
    """The path algebra kA_n."""
    return create_algebra(n, [], name=f"hereditary:{n}")
