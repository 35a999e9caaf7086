"""Endomorphism algebras in the homotopy category, Krull-Schmidt splitting and isomorphism tests."""

import random
from collections import Counter, defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix as SymMatrix
from sympy import Poly, QQ, Rational, Symbol, expand, symbols

from nakayama_ar.config import Settings, get_settings
from nakayama_ar.core.algebra import Interval
from nakayama_ar.core.complexes import (
    ChainMap,
    Complex,
    ComplexKind,
    _make,
    canonical_form,
    combine_maps,
    compose_blocks,
    compose_maps,
    direct_sum,
    identity_map,
    submatrix,
)
from nakayama_ar.core.homotopy import HomSpace, hom_spaces, minimize
from nakayama_ar.core.resolve import projectivize
from nakayama_ar.errors import DecompositionFailure, EngineError, KindMismatch, WrongKind
from nakayama_ar.metrics import IDEMPOTENT_SPLITS
from nakayama_ar.utils import get_logger, linalg
from nakayama_ar.utils.linalg import ONE, ZERO, Matrix, Vector

logger = get_logger(__name__)

_T = Symbol("t")


@dataclass(frozen=True, eq=False)
class EndAlgebra:
    """End_K(X) in the basis of homotopy classes.

    Attributes:
        complex: The (minimal) complex X
        space: Hom_K(X, X)
        basis: Chain-map representatives of the basis classes
        structure: ``structure[i][j]`` are the coordinates of ``basis[i] o basis[j]``
        unit: Coordinates of the identity
        radical: Basis of the Jacobson radical
    """

    complex: Complex
    space: HomSpace
    basis: tuple[ChainMap, ...]
    structure: tuple[tuple[Vector, ...], ...]
    unit: Vector
    radical: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def radical_dimension(self) -> int:
        return len(self.radical)

    @property
    def is_local(self) -> bool:
        return self.dimension - self.radical_dimension == 1

    def multiply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Coordinates of x o y."""
        acc = [ZERO] * self.dimension
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        acc[k] += a * b * c
        return tuple(acc)

    def left_matrix(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of y -> x o y."""
        columns = [self.structure_column(x, j) for j in range(self.dimension)]
        return linalg.transpose(columns, self.dimension) if columns else ()

    def structure_column(self, x: Sequence[Fraction], j: int) -> Vector:
        unit = [ZERO] * self.dimension
        unit[j] = ONE
        return self.multiply(x, unit)

    def element(self, x: Sequence[Fraction]) -> ChainMap:
        return combine_maps(list(x), list(self.basis), self.complex, self.complex)


def end_algebra(complex_: Complex) -> EndAlgebra:
    """Structure constants and radical of End_K(X).

    The radical is the kernel of the trace form (x, y) -> tr(L_{xy}), which is exact in
    characteristic zero; its nilpotency is checked.
    """
    space = hom_spaces(complex_, complex_)
    basis = tuple(space.class_maps())
    dim = len(basis)
    structure = tuple(
        tuple(space.reduce(compose_maps(basis[i], basis[j])) for j in range(dim)) for i in range(dim)
    )
    unit = space.reduce(identity_map(complex_))

    trace = [sum((structure[a][b][b] for b in range(dim)), ZERO) for a in range(dim)]
    gram = [
        [sum((structure[i][j][a] * trace[a] for a in range(dim) if trace[a]), ZERO) for j in range(dim)]
        for i in range(dim)
    ]
    radical = tuple(linalg.nullspace(gram, dim)) if dim else ()
    algebra = EndAlgebra(complex_, space, basis, structure, unit, radical)
    _check_nilpotent(algebra)
    return algebra


def _check_nilpotent(algebra: EndAlgebra) -> None:
    power = list(algebra.radical)
    for _ in range(algebra.dimension + 1):
        if not power:
            return
        products = [algebra.multiply(p, r) for p in power for r in algebra.radical]
        power = [products[i] for i in linalg.independent_columns(products, algebra.dimension)]
    if power:
        raise EngineError("trace-form radical of an endomorphism algebra is not nilpotent")


def _is_string(complex_: Complex) -> bool:
    """One summand per degree, no gaps and no vanishing differential."""
    degrees = complex_.degrees
    if any(len(complex_.terms[k]) != 1 for k in degrees):
        return False
    if degrees != list(range(degrees[0], degrees[-1] + 1)):
        return False
    return all(complex_.diff(k)[0][0] for k in degrees[:-1])


def _slots(complex_: Complex) -> list[tuple[int, list[int]]]:
    """Positions of equal summands in each degree."""
    slots = []
    for k in complex_.degrees:
        groups: dict[Interval, list[int]] = defaultdict(list)
        for i, s in enumerate(complex_.terms[k]):
            groups[s].append(i)
        slots.extend((k, idx) for idx in groups.values())
    return slots


def _candidates(algebra: EndAlgebra, rng: random.Random, settings: Settings) -> Iterator[Vector]:
    dim = algebra.dimension
    for _ in range(settings.idempotent_attempts):
        yield tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))
    # Elements killing one copy of a repeated summand.
    for k, idx in _slots(algebra.complex):
        if len(idx) < 2:
            continue
        blocks = [submatrix(b.component(k), idx, idx) for b in algebra.basis]
        for j in range(len(idx)):
            rows = [[blocks[i][t][j] for i in range(dim)] for t in range(len(idx))]
            kernel = linalg.nullspace(rows, dim)
            if not kernel:
                continue
            yield from kernel
            for _ in range(settings.idempotent_attempts):
                coeffs = [rng.randint(-3, 3) for _ in kernel]
                yield tuple(sum((c * v[i] for c, v in zip(coeffs, kernel)), ZERO) for i in range(dim))


def _to_fraction(value: object) -> Fraction:
    rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _idempotent_from(algebra: EndAlgebra, x: Vector) -> Vector | None:
    """A nontrivial idempotent polynomial in ``x``, from a coprime split of its characteristic polynomial."""
    coefficients = linalg.charpoly(algebra.left_matrix(x))
    chi = Poly([Rational(c.numerator, c.denominator) for c in coefficients], _T, domain=QQ)
    _, factors = chi.factor_list()
    if len(factors) < 2:
        return None
    head, mult = factors[0]
    f = head**mult
    g = Poly(1, _T, domain=QQ)
    for factor, m in factors[1:]:
        g = g * factor**m
    _, t, _ = f.gcdex(g)
    e_poly = (t * g).rem(chi)

    value = tuple(ZERO for _ in range(algebra.dimension))
    for coefficient in e_poly.all_coeffs():
        value = algebra.multiply(value, x)
        c = _to_fraction(coefficient)
        value = tuple(v + c * u for v, u in zip(value, algebra.unit))
    if not any(value) or value == algebra.unit:
        return None
    if algebra.multiply(value, value) != value:
        return None
    return value


def _lift_idempotent(e: ChainMap, settings: Settings) -> ChainMap:
    """Strict idempotent chain map in the homotopy class of ``e``."""
    x = e.source
    for _ in range(settings.lift_iterations):
        square = compose_maps(e, e)
        if square == e:
            return e
        cube = compose_maps(square, e)
        e = combine_maps([Fraction(3), Fraction(-2)], [square, cube], x, x)
    raise DecompositionFailure("idempotent lifting did not converge")


def _image(complex_: Complex, e: ChainMap) -> Complex:
    """The direct summand im(e) of a complex, re-expressed on its own summands."""
    alphas: dict[int, Matrix] = {}
    betas: dict[int, Matrix] = {}
    terms: dict[int, tuple[Interval, ...]] = {}
    slots = _slots(complex_)
    for k in complex_.degrees:
        summands = complex_.terms[k]
        ek = e.component(k)
        labels: list[Interval] = []
        alpha_cols: list[Vector] = []
        beta_rows: list[Vector] = []
        for _, idx in (slot for slot in slots if slot[0] == k):
            label = summands[idx[0]]
            block = submatrix(ek, idx, idx)
            columns = [tuple(block[i][j] for i in range(len(idx))) for j in range(len(idx))]
            chosen = [columns[j] for j in linalg.independent_columns(columns, len(idx))]
            if not chosen:
                continue
            pivots, inv = linalg.left_inverse(chosen, len(idx))
            for u in chosen:
                alpha_cols.append(
                    tuple(
                        sum((ek[x][idx[m]] * u[m] for m in range(len(idx)) if u[m]), ZERO)
                        for x in range(len(summands))
                    )
                )
                labels.append(label)
            for t in range(len(chosen)):
                row = [ZERO] * len(idx)
                for p, m in enumerate(pivots):
                    row[m] = inv[t][p]
                beta_rows.append(
                    tuple(
                        sum((row[m] * ek[idx[m]][x] for m in range(len(idx)) if row[m]), ZERO)
                        for x in range(len(summands))
                    )
                )
        if not labels:
            continue
        alpha = linalg.transpose(alpha_cols, len(summands))
        beta = tuple(beta_rows)
        # beta o alpha is unipotent; invert it by the finite geometric series
        nil = [
            [v - (ONE if r == c else ZERO) for c, v in enumerate(row)]
            for r, row in enumerate(compose_blocks(beta, alpha, labels, labels))
        ]
        correction = linalg.identity(len(labels))
        power = linalg.identity(len(labels))
        for _ in range(len(labels)):
            step = compose_blocks(linalg.freeze(nil), power, labels, labels)
            power = tuple(tuple(-v for v in row) for row in step)
            if linalg.is_zero(power):
                break
            correction = tuple(
                tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(correction, power)
            )
        terms[k] = tuple(labels)
        alphas[k] = alpha
        betas[k] = compose_blocks(correction, beta, summands, labels)

    diffs = {}
    for k in terms:
        if k + 1 in terms:
            inner = compose_blocks(complex_.diff(k), alphas[k], terms[k], complex_.term(k + 1))
            diffs[k] = compose_blocks(betas[k + 1], inner, terms[k], terms[k + 1])
    return _make(complex_.algebra, complex_.kind, terms, diffs)


def _split(complex_: Complex, rng: random.Random, settings: Settings) -> list[Complex]:
    if complex_.is_zero:
        return []
    if _is_string(complex_):
        return [complex_]
    algebra = end_algebra(complex_)
    if algebra.is_local:
        return [complex_]
    found = (_idempotent_from(algebra, x) for x in _candidates(algebra, rng, settings))
    idempotent = next((e for e in found if e is not None), None)
    if idempotent is None:
        raise DecompositionFailure(f"no nontrivial idempotent found for {complex_}")
    e = _lift_idempotent(algebra.element(idempotent), settings)
    complement = combine_maps([ONE, -ONE], [identity_map(complex_), e], complex_, complex_)
    first, second = _image(complex_, e), _image(complex_, complement)
    IDEMPOTENT_SPLITS.inc()
    logger.debug("complex.split", first=str(first), second=str(second))
    return _split(first, rng, settings) + _split(second, rng, settings)


def _labels(complex_: Complex) -> Counter[tuple[int, Interval]]:
    return Counter((k, s) for k, t in complex_.terms.items() for s in t)


def decompose(complex_: Complex, settings: Settings | None = None) -> list[tuple[Complex, int]]:
    """Indecomposable summands with multiplicities, ordered by lowest degree then descriptor.

    Raises:
        DecompositionFailure: No idempotent found, lifting did not converge or the summands do
            not reassemble the input
    """
    settings = settings or get_settings()
    minimal = complex_ if complex_.is_minimal else minimize(complex_).complex
    rng = random.Random(settings.seed)
    parts = [canonical_form(p) for p in _split(minimal, rng, settings)]

    total: Counter[tuple[int, Interval]] = Counter()
    for part in parts:
        total.update(_labels(part))
    if total != _labels(minimal):
        raise DecompositionFailure("summands do not reassemble the decomposed complex")
    if parts and not is_isomorphic_k(direct_sum(*parts), minimal, settings):
        raise DecompositionFailure("direct sum of summands is not homotopy equivalent to the input")

    groups: list[list[Complex | int]] = []
    for part in parts:
        for group in groups:
            rep = group[0]
            assert isinstance(rep, Complex)
            if rep.signature() == part.signature() and is_isomorphic_k(rep, part, settings):
                group[1] = int(group[1]) + 1
                break
        else:
            groups.append([part, 1])
    result = [(g[0], int(g[1])) for g in groups if isinstance(g[0], Complex)]
    result.sort(key=lambda item: (item[0].min_degree, str(item[0])))
    return result


def _same_kind(x: Complex, y: Complex) -> tuple[Complex, Complex]:
    if x.kind is y.kind and x.kind is not ComplexKind.MODULE:
        return x, y
    if x.kind is not ComplexKind.PROJECTIVE:
        x = projectivize(x)
    if y.kind is not ComplexKind.PROJECTIVE:
        y = projectivize(y)
    return x, y


def _block_determinants(f: ChainMap, slots: list[tuple[int, list[int], list[int]]]) -> bool:
    for k, rows, cols in slots:
        block = submatrix(f.component(k), rows, cols)
        if linalg.rank(block, len(cols)) != len(cols):
            return False
    return True


def _linear_form(variables: Sequence[Symbol], maps: Sequence[ChainMap], k: int, r: int, c: int) -> object:
    form = Rational(0)
    for v, f in zip(variables, maps):
        x = f.component(k)[r][c]
        if x:
            form += v * Rational(x.numerator, x.denominator)
    return form


def is_isomorphic_k(x: Complex, y: Complex, settings: Settings | None = None) -> bool:
    """Decide X ≅ Y in the homotopy category.

    Between minimal complexes a chain map is an isomorphism exactly when every block between
    equal summands is invertible. A generic element of Hom_K(X, Y) is tested first on random
    points, then by an exact determinant in the coordinates of Hom_K(X, Y).
    """
    settings = settings or get_settings()
    if x.algebra != y.algebra:
        raise KindMismatch("complexes over different algebras")
    x, y = _same_kind(x, y)
    x = x if x.is_minimal else minimize(x).complex
    y = y if y.is_minimal else minimize(y).complex
    if x.signature() != y.signature():
        return False
    if x.is_zero:
        return True

    slots = []
    for k in x.degrees:
        for label in set(x.terms[k]):
            rows = [i for i, s in enumerate(y.terms[k]) if s == label]
            cols = [i for i, s in enumerate(x.terms[k]) if s == label]
            slots.append((k, rows, cols))

    space = hom_spaces(x, y)
    if space.dimension == 0:
        return False
    maps = space.class_maps()
    rng = random.Random(settings.seed)
    for _ in range(settings.iso_trials):
        coeffs = [Fraction(rng.randint(-50, 50)) for _ in maps]
        if _block_determinants(combine_maps(coeffs, maps, x, y), slots):
            return True

    variables = symbols(f"c0:{len(maps)}")
    for k, rows, cols in slots:
        entries = [[_linear_form(variables, maps, k, r, c) for c in cols] for r in rows]
        if expand(SymMatrix(entries).det()) == 0:
            return False
    return True


def l_p(complex_: Complex) -> int:
    """Number of indecomposable summands of the minimal representative of a projective complex."""
    if complex_.kind is not ComplexKind.PROJECTIVE:
        raise WrongKind("l_p is defined for complexes of projectives")
    return minimize(complex_).complex.summand_count
