"""Hom spaces in the homotopy category and minimization of complexes."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from nakayama_ar.core.algebra import Interval
from nakayama_ar.core.complexes import (
    ChainMap,
    Complex,
    _make,
    compose_maps,
    identity_map,
)
from nakayama_ar.utils import get_logger, linalg
from nakayama_ar.utils.linalg import ZERO, Vector

logger = get_logger(__name__)

Position = tuple[int, int, int]


def map_positions(source: Complex, target: Complex) -> tuple[Position, ...]:
    """Matrix positions (degree, row, col) where a chain map may be nonzero."""
    positions = []
    for k in source.degrees:
        xs, ys = source.term(k), target.term(k)
        for r, y in enumerate(ys):
            for c, x in enumerate(xs):
                if x.maps_to(y):
                    positions.append((k, r, c))
    return tuple(positions)


def vector_to_map(
    source: Complex, target: Complex, positions: Sequence[Position], vector: Sequence[Fraction]
) -> ChainMap:
    comps: dict[int, list[list[Fraction]]] = {
        k: [[ZERO] * len(source.term(k)) for _ in target.term(k)] for k in {p[0] for p in positions}
    }
    for value, (k, r, c) in zip(vector, positions):
        comps[k][r][c] = Fraction(value)
    return ChainMap(source, target, {k: linalg.freeze(m) for k, m in comps.items()})


def chain_equations(
    source: Complex, target: Complex, index: dict[Position, int]
) -> list[list[Fraction]]:
    """Rows of the linear system d_Y f - f d_X = 0 in the coordinates ``index``."""
    size = len(index)
    equations = []
    for k in source.degrees:
        above = target.term(k + 1)
        if not above:
            continue
        xs, ys, xs_next = source.term(k), target.term(k), source.term(k + 1)
        dy, dx = target.diff(k), source.diff(k)
        for c, x in enumerate(xs):
            for r, y in enumerate(above):
                if not x.maps_to(y):
                    continue
                row = [ZERO] * size
                touched = False
                for m in range(len(ys)):
                    if dy[r][m] and (k, m, c) in index:
                        row[index[k, m, c]] += dy[r][m]
                        touched = True
                for m in range(len(xs_next)):
                    if dx[m][c] and (k + 1, r, m) in index:
                        row[index[k + 1, r, m]] -= dx[m][c]
                        touched = True
                if touched:
                    equations.append(row)
    return equations


def _homotopy_images(source: Complex, target: Complex, index: dict[Position, int]) -> list[Vector]:
    size = len(index)
    images = []
    for k in source.degrees:
        xs, lower = source.term(k), target.term(k - 1)
        ys, xs_prev = target.term(k), source.term(k - 1)
        dy, dx = target.diff(k - 1), source.diff(k - 1)
        for m, y in enumerate(lower):
            for c, x in enumerate(xs):
                if not x.maps_to(y):
                    continue
                vector = [ZERO] * size
                for r in range(len(ys)):
                    if dy[r][m] and (k, r, c) in index:
                        vector[index[k, r, c]] += dy[r][m]
                for j in range(len(xs_prev)):
                    if dx[c][j] and (k - 1, m, j) in index:
                        vector[index[k - 1, m, j]] += dx[c][j]
                if any(vector):
                    images.append(tuple(vector))
    return images


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Chain maps, null-homotopic maps and Hom in the homotopy category.

    Vectors are coordinates over ``positions``. ``classes`` are chain maps whose cosets form a
    basis of Hom_K(source, target).
    """

    source: Complex
    target: Complex
    positions: tuple[Position, ...]
    cycles: tuple[Vector, ...]
    boundaries: tuple[Vector, ...]
    classes: tuple[Vector, ...]
    selector: tuple[tuple[int, ...], linalg.Matrix]

    @property
    def dimension(self) -> int:
        return len(self.classes)

    @property
    def index(self) -> dict[Position, int]:
        return {p: i for i, p in enumerate(self.positions)}

    def to_map(self, vector: Sequence[Fraction]) -> ChainMap:
        return vector_to_map(self.source, self.target, self.positions, vector)

    def to_vector(self, f: ChainMap) -> Vector:
        return tuple(f.component(k)[r][c] for k, r, c in self.positions)

    def class_maps(self) -> list[ChainMap]:
        return [self.to_map(v) for v in self.classes]

    def reduce(self, f: ChainMap | Sequence[Fraction]) -> Vector:
        """Coordinates of the homotopy class of a chain map in the ``classes`` basis."""
        vector = self.to_vector(f) if isinstance(f, ChainMap) else tuple(f)
        if not self.positions:
            return ()
        coords = linalg.coordinates(self.selector, vector)
        return coords[len(self.boundaries) :]

    def is_null_homotopic(self, f: ChainMap | Sequence[Fraction]) -> bool:
        return not any(self.reduce(f))


def hom_spaces(source: Complex, target: Complex) -> HomSpace:
    """Solve for chain maps and homotopies between two complexes of any kinds."""
    positions = map_positions(source, target)
    index = {p: i for i, p in enumerate(positions)}
    size = len(positions)
    cycles = tuple(linalg.nullspace(chain_equations(source, target, index), size)) if size else ()
    images = _homotopy_images(source, target, index)
    boundaries = tuple(images[i] for i in linalg.independent_columns(images, size))
    combined = list(boundaries) + list(cycles)
    chosen = linalg.independent_columns(combined, size)
    classes = tuple(combined[i] for i in chosen if i >= len(boundaries))
    selector = linalg.left_inverse(list(boundaries) + list(classes), size)
    logger.debug(
        "hom.solved",
        variables=size,
        cycles=len(cycles),
        boundaries=len(boundaries),
        classes=len(classes),
    )
    return HomSpace(source, target, positions, cycles, boundaries, classes, selector)


@dataclass(frozen=True, eq=False)
class Minimization:
    """Result of Gaussian elimination.

    Attributes:
        complex: Minimal complex
        stripped: (summand, degree k) for every cancelled isomorphism between degrees k and k+1
        inclusion: Chain map from ``complex`` into the input when tracking was requested
    """

    complex: Complex
    stripped: tuple[tuple[Interval, int], ...]
    inclusion: ChainMap | None = None


def _find_isomorphism(terms: dict[int, list[Interval]], diffs: dict[int, list[list[Fraction]]]) -> tuple[int, int, int] | None:
    for k in sorted(diffs):
        d = diffs[k]
        sources, targets = terms[k], terms[k + 1]
        for c, s in enumerate(sources):
            for r, t in enumerate(targets):
                if d[r][c] and s == t:
                    return k, r, c
    return None


def _freeze(terms: dict[int, list[Interval]], diffs: dict[int, list[list[Fraction]]], template: Complex) -> Complex:
    return _make(
        template.algebra,
        template.kind,
        {k: tuple(t) for k, t in terms.items()},
        {k: linalg.freeze(d) for k, d in diffs.items()},
        check=False,
    )


def minimize(complex_: Complex, track: bool = False) -> Minimization:
    """Cancel isomorphism entries of the differential until the complex is minimal.

    Args:
        complex_: Any complex
        track: Also return the inclusion of the minimal complex as a chain map

    Returns:
        The minimal complex with the list of stripped contractible summands
    """
    terms = {k: list(t) for k, t in complex_.terms.items()}
    diffs = {k: [list(row) for row in d] for k, d in complex_.differentials.items()}
    stripped: list[tuple[Interval, int]] = []
    inclusion = identity_map(complex_) if track else None
    current = complex_

    while (hit := _find_isomorphism(terms, diffs)) is not None:
        k, r, c = hit
        d = diffs[k]
        pivot = d[r][c]
        sources, targets = terms[k], terms[k + 1]
        stripped.append((sources[c], k))

        kept_cols = [a for a in range(len(sources)) if a != c]
        kept_rows = [x for x in range(len(targets)) if x != r]
        reduced = []
        for x in kept_rows:
            line = []
            for a in kept_cols:
                value = d[x][a]
                if d[x][c] and d[r][a] and sources[a].maps_to(targets[x]):
                    value -= d[x][c] * d[r][a] / pivot
                line.append(value)
            reduced.append(line)

        if track:
            column_k = []
            for a in kept_cols:
                column = [ZERO] * len(sources)
                column[a] = linalg.ONE
                column[c] = -d[r][a] / pivot
                column_k.append(column)
            step_k = [[column_k[j][i] for j in range(len(kept_cols))] for i in range(len(sources))]
            step_k1 = [
                [linalg.ONE if x == kept_rows[j] else ZERO for j in range(len(kept_rows))]
                for x in range(len(targets))
            ]

        if k - 1 in diffs:
            del diffs[k - 1][c]
        if k + 1 in diffs:
            diffs[k + 1] = [[row[x] for x in kept_rows] for row in diffs[k + 1]]
        diffs[k] = reduced
        del sources[c]
        del targets[r]
        for degree in (k, k + 1):
            if not terms[degree]:
                del terms[degree]
        for degree in (k - 1, k, k + 1):
            if degree in diffs and (degree not in terms or degree + 1 not in terms):
                del diffs[degree]

        if track:
            smaller = _freeze(terms, diffs, complex_)
            comps = {}
            for degree, summands in smaller.terms.items():
                if degree == k:
                    comps[degree] = linalg.freeze(step_k)
                elif degree == k + 1:
                    comps[degree] = linalg.freeze(step_k1)
                else:
                    comps[degree] = linalg.identity(len(summands))
            step = ChainMap(smaller, current, comps)
            inclusion = compose_maps(inclusion, step)
            current = smaller

    result = _freeze(terms, diffs, complex_)
    if inclusion is not None:
        inclusion = ChainMap(result, complex_, inclusion.components)
    if stripped:
        logger.debug("complex.minimized", stripped=len(stripped), summands=result.summand_count)
    return Minimization(result, tuple(stripped), inclusion)
