"""Brute-force linear representations of the linear quiver.

Used as an independent oracle for the interval combinatorics: a representation stores one
vector space per vertex and one matrix per arrow v+1 -> v.
"""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from nakayama_ar.core.algebra import Interval, Module, NakayamaAlgebra
from nakayama_ar.errors import InconsistentRep
from nakayama_ar.utils import linalg
from nakayama_ar.utils.linalg import Matrix


@dataclass(frozen=True)
class LinearRepresentation:
    """Representation of A_n.

    Attributes:
        dims: Dimension at vertices 1..n
        arrows: ``arrows[v - 1]`` is the map X_{v+1} -> X_v, shape dims[v-1] x dims[v]
    """

    dims: tuple[int, ...]
    arrows: tuple[Matrix, ...]

    @property
    def n(self) -> int:
        return len(self.dims)

    def validate(self) -> None:
        if len(self.arrows) != max(self.n - 1, 0):
            raise InconsistentRep(f"expected {self.n - 1} arrow maps, got {len(self.arrows)}")
        for v, matrix in enumerate(self.arrows, start=1):
            rows, cols = self.dims[v - 1], self.dims[v]
            if len(matrix) != rows or any(len(row) != cols for row in matrix):
                raise InconsistentRep(f"arrow {v + 1}->{v} must be {rows}x{cols}")

    def path_map(self, a: int, b: int) -> Matrix:
        """Composite X_b -> X_a for a <= b."""
        result = linalg.identity(self.dims[b - 1])
        for v in range(b - 1, a - 1, -1):
            result = linalg.matmul(self.arrows[v - 1], result, self.dims[b - 1])
        return result

    def path_rank(self, a: int, b: int) -> int:
        if a < 1 or b > self.n or a > b:
            return 0
        return linalg.rank(self.path_map(a, b), self.dims[b - 1])


def rep_oracle(algebra: NakayamaAlgebra, modules: Module | Iterable[Module]) -> LinearRepresentation:
    """Representation of an interval module or of a direct sum of them."""
    if modules is None or isinstance(modules, Interval):
        summands = [modules]
    else:
        summands = list(modules)
    summands = [algebra.check(m) for m in summands if m is not None]

    bases = [[k for k, m in enumerate(summands) if m.contains(v)] for v in range(1, algebra.n + 1)]
    arrows = []
    for v in range(1, algebra.n):
        upper = bases[v]
        arrows.append(
            tuple(
                tuple(linalg.ONE if k == l else linalg.ZERO for l in upper)
                for k in bases[v - 1]
            )
        )
    return LinearRepresentation(tuple(len(b) for b in bases), tuple(arrows))


def decompose_rep(rep: LinearRepresentation) -> Counter[Interval]:
    """Interval multiplicities by rank counting."""
    rep.validate()
    ranks: dict[tuple[int, int], int] = {}

    def r(a: int, b: int) -> int:
        if (a, b) not in ranks:
            ranks[a, b] = rep.path_rank(a, b)
        return ranks[a, b]

    result: Counter[Interval] = Counter()
    for a in range(1, rep.n + 1):
        for b in range(a, rep.n + 1):
            count = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            if count < 0:
                raise InconsistentRep(f"negative multiplicity for [{a},{b}]")
            if count:
                result[Interval(a, b)] = count
    return result


def rep_hom_dim(source: LinearRepresentation, target: LinearRepresentation) -> int:
    """Dimension of the space of representation morphisms, by a direct linear solve."""
    source.validate()
    target.validate()
    if source.n != target.n:
        raise InconsistentRep("representations over different quivers")

    offsets = []
    total = 0
    for v in range(source.n):
        offsets.append(total)
        total += target.dims[v] * source.dims[v]

    def var(v: int, r: int, c: int) -> int:
        return offsets[v - 1] + r * source.dims[v - 1] + c

    equations: list[list[Fraction]] = []
    for v in range(1, source.n):
        alpha_s, alpha_t = source.arrows[v - 1], target.arrows[v - 1]
        # f_v alpha_s = alpha_t f_{v+1}, an identity of maps X_{v+1} -> Y_v
        for r in range(target.dims[v - 1]):
            for c in range(source.dims[v]):
                row = [linalg.ZERO] * total
                for m in range(source.dims[v - 1]):
                    row[var(v, r, m)] += alpha_s[m][c]
                for m in range(target.dims[v]):
                    row[var(v + 1, m, c)] -= alpha_t[r][m]
                equations.append(row)
    return total - linalg.rank(equations, total)

