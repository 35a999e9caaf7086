"""Bounded complexes whose terms are direct sums of interval modules.

A differential d^k is a scalar matrix over canonical maps with rows indexed by the summands of
degree k+1 and columns by the summands of degree k. Products of such matrices are ordinary
matrix products masked by the Hom formula between the outer source and the outer target, since
a composite of canonical maps is the canonical map when nonzero.
"""

import re
from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from nakayama_ar.core.algebra import Interval, NakayamaAlgebra, opposite_algebra, reflect
from nakayama_ar.core.representation import rep_oracle
from nakayama_ar.errors import (
    ExpressionSyntaxError,
    HomViolation,
    KindMismatch,
    NotSquareZero,
    UnknownAlias,
    WrongKind,
)
from nakayama_ar.utils import linalg
from nakayama_ar.utils.linalg import ZERO, Matrix


class ComplexKind(str, Enum):
    """What the terms of a complex are."""

    PROJECTIVE = "P"
    INJECTIVE = "I"
    MODULE = "M"


Terms = Mapping[int, tuple[Interval, ...]]


def compose_blocks(
    left: Matrix,
    right: Matrix,
    sources: Sequence[Interval],
    targets: Sequence[Interval],
) -> Matrix:
    """Matrix of the composite ``left`` after ``right``.

    Args:
        left: Map from the middle summands to ``targets``
        right: Map from ``sources`` to the middle summands
        sources: Summands of the source
        targets: Summands of the target
    """
    inner = len(right)
    return tuple(
        tuple(
            sum((left[r][m] * right[m][c] for m in range(inner) if left[r][m] and right[m][c]), ZERO)
            if sources[c].maps_to(targets[r])
            else ZERO
            for c in range(len(sources))
        )
        for r in range(len(targets))
    )


def block_matrix(blocks: Sequence[Sequence[Matrix]], rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """Assemble a block matrix from blocks of the given row and column sizes."""
    result = []
    for i, height in enumerate(rows):
        for r in range(height):
            line: list[Fraction] = []
            for j, width in enumerate(cols):
                line.extend(blocks[i][j][r] if width else ())
            result.append(tuple(line))
    return tuple(result)


def submatrix(matrix: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(matrix[r][c] for c in cols) for r in rows)


def _label_key(kind: "ComplexKind", interval: Interval) -> tuple[int, int]:
    if kind is ComplexKind.PROJECTIVE:
        return (interval.hi, interval.lo)
    return (interval.lo, interval.hi)


@dataclass(frozen=True, eq=False)
class Complex:
    """Bounded complex over a Nakayama algebra.

    Only nonzero degrees appear in ``terms``; ``differentials`` holds d^k whenever degrees k and
    k+1 are both nonzero.
    """

    algebra: NakayamaAlgebra
    kind: ComplexKind
    terms: Terms
    differentials: Mapping[int, Matrix]

    def term(self, k: int) -> tuple[Interval, ...]:
        return self.terms.get(k, ())

    def diff(self, k: int) -> Matrix:
        if k in self.differentials:
            return self.differentials[k]
        return linalg.zeros(len(self.term(k + 1)), len(self.term(k)))

    @property
    def degrees(self) -> list[int]:
        return sorted(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        return min(self.terms)

    @property
    def max_degree(self) -> int:
        return max(self.terms)

    @property
    def summand_count(self) -> int:
        return sum(len(t) for t in self.terms.values())

    @property
    def is_minimal(self) -> bool:
        """No nonzero differential entry between equal summands."""
        for k, d in self.differentials.items():
            sources, targets = self.term(k), self.term(k + 1)
            for r, row in enumerate(d):
                for c, x in enumerate(row):
                    if x and sources[c] == targets[r]:
                        return False
        return True

    def signature(self) -> tuple[tuple[int, tuple[Interval, ...]], ...]:
        """Per-degree summand multisets."""
        return tuple((k, tuple(sorted(self.terms[k]))) for k in self.degrees)

    def relative_signature(self) -> tuple[tuple[int, tuple[Interval, ...]], ...]:
        """Signature with degrees measured from the lowest nonzero degree."""
        if self.is_zero:
            return ()
        low = self.min_degree
        return tuple((k - low, labels) for k, labels in self.signature())

    def label(self, interval: Interval) -> str:
        if self.kind is ComplexKind.PROJECTIVE:
            return f"P{interval.hi}"
        if self.kind is ComplexKind.INJECTIVE:
            return f"I{interval.lo}"
        return str(interval)

    def __str__(self) -> str:
        return describe(self)

    def __repr__(self) -> str:
        return f"Complex({describe(self)!r})"


def _as_interval(algebra: NakayamaAlgebra, kind: ComplexKind, label: int | Interval) -> Interval:
    if isinstance(label, Interval):
        interval = algebra.check(label)
        if kind is ComplexKind.PROJECTIVE and not algebra.is_projective(interval):
            raise WrongKind(f"{interval} is not projective")
        if kind is ComplexKind.INJECTIVE and not algebra.is_injective(interval):
            raise WrongKind(f"{interval} is not injective")
        return interval
    if kind is ComplexKind.PROJECTIVE:
        return algebra.projective(int(label))
    if kind is ComplexKind.INJECTIVE:
        return algebra.injective(int(label))
    raise WrongKind("module-kind complexes need interval summands")


def _make(
    algebra: NakayamaAlgebra,
    kind: ComplexKind,
    terms: Mapping[int, Sequence[Interval]],
    differentials: Mapping[int, Matrix],
    check: bool = True,
) -> Complex:
    clean = {k: tuple(t) for k, t in terms.items() if t}
    diffs = {}
    for k in clean:
        if k + 1 in clean:
            matrix = differentials.get(k)
            if matrix is None:
                matrix = linalg.zeros(len(clean[k + 1]), len(clean[k]))
            diffs[k] = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    complex_ = Complex(algebra, kind, clean, diffs)
    if check:
        validate_complex(complex_)
    return complex_


def validate_complex(complex_: Complex) -> None:
    """Check shapes, Hom support and d o d = 0."""
    for k, d in complex_.differentials.items():
        sources, targets = complex_.term(k), complex_.term(k + 1)
        if len(d) != len(targets) or any(len(row) != len(sources) for row in d):
            raise HomViolation(f"d{k} must be {len(targets)}x{len(sources)}")
        for r, row in enumerate(d):
            for c, x in enumerate(row):
                if x and not sources[c].maps_to(targets[r]):
                    raise HomViolation(f"d{k} entry {sources[c]} -> {targets[r]} where Hom = 0")
    for k in complex_.differentials:
        if k + 1 in complex_.differentials:
            square = compose_blocks(
                complex_.diff(k + 1), complex_.diff(k), complex_.term(k), complex_.term(k + 2)
            )
            if not linalg.is_zero(square):
                raise NotSquareZero(f"d{k + 1} o d{k} != 0")


def build_complex(
    algebra: NakayamaAlgebra,
    kind: ComplexKind | str,
    terms: Mapping[int, Sequence[int | Interval]],
    differentials: Mapping[int, Sequence[Sequence[Any]]] | None = None,
) -> Complex:
    """Validated complex from summand labels and differential matrices.

    Args:
        algebra: Base algebra
        kind: ``P``, ``I`` or ``M``
        terms: Degree to summands; integers are vertex labels of P_i or I_i
        differentials: Degree k to the matrix of d^k (rows: degree k+1 summands)
    """
    kind = ComplexKind(kind)
    intervals = {k: tuple(_as_interval(algebra, kind, x) for x in t) for k, t in terms.items()}
    matrices = {k: linalg.freeze(m) for k, m in (differentials or {}).items()}
    for k in matrices:
        if not intervals.get(k) or not intervals.get(k + 1):
            raise HomViolation(f"d{k} given but degree {k} or {k + 1} is zero")
    return _make(algebra, kind, intervals, matrices)


def zero_complex(algebra: NakayamaAlgebra, kind: ComplexKind = ComplexKind.PROJECTIVE) -> Complex:
    return _make(algebra, kind, {}, {}, check=False)


def stalk_complex(
    algebra: NakayamaAlgebra,
    modules: Interval | Sequence[Interval],
    degree: int = 0,
    kind: ComplexKind = ComplexKind.MODULE,
) -> Complex:
    """Complex concentrated in one degree."""
    summands = (modules,) if isinstance(modules, Interval) else tuple(modules)
    return _make(algebra, kind, {degree: tuple(algebra.check(m) for m in summands)}, {})


def shift(complex_: Complex, k: int) -> Complex:
    """X[k] with X[k]^j = X^{j+k} and d_{X[k]} = (-1)^k d_X."""
    sign = -1 if k % 2 else 1
    terms = {j - k: t for j, t in complex_.terms.items()}
    diffs = {j - k: tuple(tuple(sign * x for x in row) for row in d) for j, d in complex_.differentials.items()}
    return Complex(complex_.algebra, complex_.kind, terms, diffs)


def truncate_le(complex_: Complex, n: int) -> Complex:
    """Brutal truncation keeping degrees <= n."""
    return _make(
        complex_.algebra,
        complex_.kind,
        {k: t for k, t in complex_.terms.items() if k <= n},
        complex_.differentials,
        check=False,
    )


def truncate_ge(complex_: Complex, n: int) -> Complex:
    """Brutal truncation keeping degrees >= n."""
    return _make(
        complex_.algebra,
        complex_.kind,
        {k: t for k, t in complex_.terms.items() if k >= n},
        complex_.differentials,
        check=False,
    )


def _same_category(x: Complex, y: Complex) -> None:
    if x.algebra != y.algebra:
        raise KindMismatch("complexes over different algebras")
    if x.kind is not y.kind:
        raise KindMismatch(f"cannot combine {x.kind.name} and {y.kind.name} complexes")


def direct_sum(*complexes: Complex) -> Complex:
    """Block-diagonal direct sum."""
    first = complexes[0]
    for other in complexes[1:]:
        _same_category(first, other)
    degrees = sorted({k for c in complexes for k in c.terms})
    terms = {k: tuple(s for c in complexes for s in c.term(k)) for k in degrees}
    diffs = {}
    for k in degrees:
        rows = [len(c.term(k + 1)) for c in complexes]
        cols = [len(c.term(k)) for c in complexes]
        blocks = [
            [c.diff(k) if i == j else linalg.zeros(rows[i], cols[j]) for j in range(len(complexes))]
            for i, c in enumerate(complexes)
        ]
        diffs[k] = block_matrix(blocks, rows, cols)
    return _make(first.algebra, first.kind, terms, diffs, check=False)


@dataclass(frozen=True, eq=False)
class ChainMap:
    """Degreewise scalar matrices over canonical maps; component k has rows target^k."""

    source: Complex
    target: Complex
    components: Mapping[int, Matrix]

    def component(self, k: int) -> Matrix:
        if k in self.components:
            return self.components[k]
        return linalg.zeros(len(self.target.term(k)), len(self.source.term(k)))

    @property
    def is_zero(self) -> bool:
        return all(linalg.is_zero(m) for m in self.components.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        degrees = set(self.components) | set(other.components)
        return all(self.component(k) == other.component(k) for k in degrees)

    __hash__ = None  # type: ignore[assignment]


def chain_map(
    source: Complex,
    target: Complex,
    components: Mapping[int, Sequence[Sequence[Any]]],
    check: bool = True,
) -> ChainMap:
    """Chain map from explicit component matrices."""
    comps = {
        k: linalg.freeze(m)
        for k, m in components.items()
        if source.term(k) and target.term(k)
    }
    result = ChainMap(source, target, comps)
    if check:
        validate_chain_map(result)
    return result


def validate_chain_map(f: ChainMap) -> None:
    """Check Hom support and commutation with the differentials."""
    src, dst = f.source, f.target
    if src.algebra != dst.algebra:
        raise KindMismatch("chain map between complexes over different algebras")
    for k, m in f.components.items():
        for r, row in enumerate(m):
            for c, x in enumerate(row):
                if x and not src.term(k)[c].maps_to(dst.term(k)[r]):
                    raise HomViolation(f"f{k} entry {src.term(k)[c]} -> {dst.term(k)[r]} where Hom = 0")
    for k in src.terms:
        left = compose_blocks(dst.diff(k), f.component(k), src.term(k), dst.term(k + 1))
        right = compose_blocks(f.component(k + 1), src.diff(k), src.term(k), dst.term(k + 1))
        if left != right:
            raise NotSquareZero(f"chain map does not commute with d{k}")


def identity_map(complex_: Complex) -> ChainMap:
    return ChainMap(
        complex_, complex_, {k: linalg.identity(len(t)) for k, t in complex_.terms.items()}
    )


def compose_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f."""
    x, y, z = f.source, f.target, g.target
    comps = {}
    for k in x.terms:
        if z.term(k):
            comps[k] = compose_blocks(g.component(k), f.component(k), x.term(k), z.term(k))
    return ChainMap(x, z, comps)


def combine_maps(coefficients: Sequence[Fraction], maps: Sequence[ChainMap], source: Complex, target: Complex) -> ChainMap:
    """Linear combination of parallel chain maps."""
    comps = {}
    for k in source.terms:
        if not target.term(k):
            continue
        rows, cols = len(target.term(k)), len(source.term(k))
        acc = [[ZERO] * cols for _ in range(rows)]
        for coefficient, f in zip(coefficients, maps):
            if not coefficient:
                continue
            m = f.component(k)
            for r in range(rows):
                for c in range(cols):
                    if m[r][c]:
                        acc[r][c] += coefficient * m[r][c]
        comps[k] = linalg.freeze(acc)
    return ChainMap(source, target, comps)


def shift_map(f: ChainMap, k: int) -> ChainMap:
    """f[k]; components move with the degrees and keep their sign."""
    return ChainMap(
        shift(f.source, k), shift(f.target, k), {j - k: m for j, m in f.components.items()}
    )


def cone(f: ChainMap) -> Complex:
    """cone(f)^k = X^{k+1} + Y^k with d = (-d_X, 0; f, d_Y)."""
    x, y = f.source, f.target
    _same_category(x, y)
    degrees = sorted({k - 1 for k in x.terms} | set(y.terms))
    terms = {k: x.term(k + 1) + y.term(k) for k in degrees}
    diffs = {}
    for k in degrees:
        rows = [len(x.term(k + 2)), len(y.term(k + 1))]
        cols = [len(x.term(k + 1)), len(y.term(k))]
        minus_dx = tuple(tuple(-v for v in row) for row in x.diff(k + 1))
        blocks = [
            [minus_dx, linalg.zeros(rows[0], cols[1])],
            [f.component(k + 1), y.diff(k)],
        ]
        diffs[k] = block_matrix(blocks, rows, cols)
    return _make(x.algebra, x.kind, terms, diffs, check=False)


def cone_maps(f: ChainMap) -> tuple[ChainMap, ChainMap]:
    """The inclusion Y -> cone(f) and the projection cone(f) -> X[1]."""
    x, y = f.source, f.target
    c = cone(f)
    x1 = shift(x, 1)
    inclusion = {}
    projection = {}
    for k in c.terms:
        a, b = len(x.term(k + 1)), len(y.term(k))
        if b:
            inclusion[k] = block_matrix([[linalg.zeros(a, b)], [linalg.identity(b)]], [a, b], [b])
        if a:
            projection[k] = block_matrix([[linalg.identity(a), linalg.zeros(a, b)]], [a], [a, b])
    return ChainMap(y, c, inclusion), ChainMap(c, x1, projection)


def nu_complex(complex_: Complex) -> Complex:
    """Apply the Nakayama functor P_i -> I_i termwise, keeping scalars."""
    if complex_.kind is not ComplexKind.PROJECTIVE:
        raise WrongKind("the Nakayama functor needs a complex of projectives")
    alg = complex_.algebra
    terms = {k: tuple(alg.injective(s.hi) for s in t) for k, t in complex_.terms.items()}
    return _make(alg, ComplexKind.INJECTIVE, terms, complex_.differentials)


def nu_inv_complex(complex_: Complex) -> Complex:
    """Apply the inverse Nakayama functor I_i -> P_i termwise."""
    if complex_.kind is not ComplexKind.INJECTIVE:
        raise WrongKind("the inverse Nakayama functor needs a complex of injectives")
    alg = complex_.algebra
    terms = {k: tuple(alg.projective(s.lo) for s in t) for k, t in complex_.terms.items()}
    return _make(alg, ComplexKind.PROJECTIVE, terms, complex_.differentials)


_DUAL_KIND = {
    ComplexKind.PROJECTIVE: ComplexKind.INJECTIVE,
    ComplexKind.INJECTIVE: ComplexKind.PROJECTIVE,
    ComplexKind.MODULE: ComplexKind.MODULE,
}


def dual_complex(complex_: Complex) -> Complex:
    """The k-dual over the opposite algebra: DX^k = D(X^{-k}), d = transpose."""
    alg = complex_.algebra
    terms = {-k: tuple(reflect(alg, s) for s in t) for k, t in complex_.terms.items()}
    diffs = {
        -k - 1: linalg.transpose(d, len(complex_.term(k)))
        for k, d in complex_.differentials.items()
    }
    return Complex(opposite_algebra(alg), _DUAL_KIND[complex_.kind], terms, diffs)


def dual_map(f: ChainMap) -> ChainMap:
    """D(f): DY -> DX."""
    comps = {-k: linalg.transpose(m, len(f.source.term(k))) for k, m in f.components.items()}
    return ChainMap(dual_complex(f.target), dual_complex(f.source), comps)


def _vertex_basis(summands: Sequence[Interval], v: int) -> list[int]:
    return [i for i, s in enumerate(summands) if s.contains(v)]


def _vertex_matrix(d: Matrix, sources: Sequence[Interval], targets: Sequence[Interval], v: int) -> Matrix:
    return submatrix(d, _vertex_basis(targets, v), _vertex_basis(sources, v))


def homology(complex_: Complex) -> dict[int, Counter[Interval]]:
    """Interval decomposition of every nonzero cohomology module."""
    result: dict[int, Counter[Interval]] = {}
    alg = complex_.algebra
    n = alg.n
    for k in complex_.degrees:
        here, above, below = complex_.term(k), complex_.term(k + 1), complex_.term(k - 1)
        rep = rep_oracle(alg, here)
        cycles = {}
        boundaries = {}
        for v in range(1, n + 1):
            dim = rep.dims[v - 1]
            out = _vertex_matrix(complex_.diff(k), here, above, v)
            cycles[v] = linalg.nullspace(out, dim) if dim else []
            incoming = _vertex_matrix(complex_.diff(k - 1), below, here, v)
            boundaries[v] = [tuple(row[c] for row in incoming) for c in range(len(_vertex_basis(below, v)))]

        ranks: dict[tuple[int, int], int] = {}

        def r(a: int, b: int) -> int:
            if a < 1 or b > n or a > b:
                return 0
            if (a, b) not in ranks:
                dim_a = rep.dims[a - 1]
                path = rep.path_map(a, b)
                images = [
                    tuple(sum((path[i][j] * z[j] for j in range(len(z)) if z[j]), ZERO) for i in range(dim_a))
                    for z in cycles[b]
                ]
                columns = images + boundaries[a]
                stacked = [[col[i] for col in columns] for i in range(dim_a)]
                base = [[col[i] for col in boundaries[a]] for i in range(dim_a)]
                ranks[a, b] = linalg.rank(stacked, len(columns)) - linalg.rank(base, len(boundaries[a]))
            return ranks[a, b]

        counts: Counter[Interval] = Counter()
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
                if m:
                    counts[Interval(a, b)] = m
        if counts:
            result[k] = counts
    return result


def euler_characteristic(complex_: Complex) -> tuple[int, ...]:
    """Alternating sum of dimension vectors."""
    totals = [0] * complex_.algebra.n
    for k, summands in complex_.terms.items():
        sign = -1 if k % 2 else 1
        for s in summands:
            for v in range(s.lo, s.hi + 1):
                totals[v - 1] += sign
    return tuple(totals)


def canonical_form(complex_: Complex) -> Complex:
    """Sort summands by label and normalize scalars; an isomorphic complex."""
    kind = complex_.kind
    perms = {
        k: sorted(range(len(t)), key=lambda i, t=t: _label_key(kind, t[i]))
        for k, t in complex_.terms.items()
    }
    terms = {k: tuple(complex_.terms[k][i] for i in p) for k, p in perms.items()}
    diffs = {
        k: [[d[r][c] for c in perms[k]] for r in perms[k + 1]]
        for k, d in complex_.differentials.items()
    }
    for k in sorted(terms, reverse=True):
        if k not in diffs:
            continue
        d = diffs[k]
        for c in range(len(terms[k])):
            pivot = next((d[r][c] for r in range(len(d)) if d[r][c]), None)
            if pivot is None or pivot == 1:
                continue
            for r in range(len(d)):
                d[r][c] /= pivot
            if k - 1 in diffs:
                lower = diffs[k - 1]
                lower[c] = [x * pivot for x in lower[c]]
    return Complex(complex_.algebra, kind, terms, {k: linalg.freeze(d) for k, d in diffs.items()})


def _format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def describe(complex_: Complex) -> str:
    """Descriptor such as ``0:{P1} 1:{P3} d0=[1]``; the zero complex is ``0``."""
    if complex_.is_zero:
        return "0"
    parts = [
        f"{k}:{{{','.join(complex_.label(s) for s in complex_.terms[k])}}}"
        for k in complex_.degrees
    ]
    for k in complex_.degrees:
        if k in complex_.differentials:
            entries = ",".join(_format_scalar(x) for row in complex_.differentials[k] for x in row)
            parts.append(f"d{k}=[{entries}]")
    return " ".join(parts)


_DEGREE_TOKEN = re.compile(r"^(-?\d+):\{([^}]*)\}$")
_DIFF_TOKEN = re.compile(r"^d(-?\d+)=\[([^\]]*)\]$")
_SUMMAND = re.compile(r"P(\d+)|I(\d+)|\[(\d+),(\d+)\]")


def _parse_scalar(token: str) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ExpressionSyntaxError(f"bad differential entry {token.strip()!r}") from e


def _parse_interval(algebra: NakayamaAlgebra, lo: str, hi: str) -> Interval:
    if int(lo) > int(hi):
        raise ExpressionSyntaxError(f"empty interval [{lo},{hi}]")
    return algebra.check(Interval(int(lo), int(hi)))


def parse_descriptor(algebra: NakayamaAlgebra, text: str) -> Complex:
    """Inverse of :func:`describe`."""
    text = text.strip()
    if text == "0":
        return zero_complex(algebra)
    kinds: set[ComplexKind] = set()
    labels: dict[int, list[Interval]] = {}
    entries: dict[int, list[Fraction]] = {}
    for token in text.split():
        if m := _DEGREE_TOKEN.match(token):
            summands = []
            for p, i, a, b in _SUMMAND.findall(m.group(2)):
                if p:
                    kinds.add(ComplexKind.PROJECTIVE)
                    summands.append(algebra.projective(int(p)))
                elif i:
                    kinds.add(ComplexKind.INJECTIVE)
                    summands.append(algebra.injective(int(i)))
                else:
                    kinds.add(ComplexKind.MODULE)
                    summands.append(_parse_interval(algebra, a, b))
            labels[int(m.group(1))] = summands
        elif m := _DIFF_TOKEN.match(token):
            body = m.group(2).strip()
            entries[int(m.group(1))] = [_parse_scalar(x) for x in body.split(",")] if body else []
        else:
            raise ExpressionSyntaxError(f"cannot parse descriptor token {token!r}")
    if len(kinds) != 1:
        raise UnknownAlias(f"descriptor mixes summand kinds: {text!r}")
    matrices = {}
    for k, flat in entries.items():
        rows, cols = len(labels.get(k + 1, ())), len(labels.get(k, ()))
        if len(flat) != rows * cols:
            raise HomViolation(f"d{k} has {len(flat)} entries, expected {rows * cols}")
        matrices[k] = tuple(tuple(flat[r * cols : (r + 1) * cols]) for r in range(rows))
    return _make(algebra, kinds.pop(), labels, matrices)

