"""Projective and injective models of bounded complexes.

A complex Y of modules (or injectives) is replaced by a quasi-isomorphic complex of projectives
built from the top degree down: the brutal truncation A of Y below its top degree sits in a
triangle A[-1] -> B -> Y with B the top term, so Y is the cone of a map between the models of
A[-1] and B. The injective side is obtained by duality over the opposite algebra.
"""

from collections.abc import Sequence

from nakayama_ar.core.algebra import Interval
from nakayama_ar.core.complexes import (
    ChainMap,
    Complex,
    ComplexKind,
    canonical_form,
    compose_blocks,
    compose_maps,
    cone,
    dual_complex,
    homology,
    shift,
    truncate_le,
    zero_complex,
)
from nakayama_ar.core.homalg import projective_cover_resolution
from nakayama_ar.core.homotopy import chain_equations, map_positions, minimize, vector_to_map
from nakayama_ar.errors import HomologyMismatch, LiftFailure, WrongKind
from nakayama_ar.utils import get_logger, linalg
from nakayama_ar.utils.linalg import ZERO, Matrix

logger = get_logger(__name__)


def _lift(
    source: Complex,
    target: Complex,
    stalk: Sequence[Interval],
    cover: Matrix,
    rhs: Matrix,
    degree: int,
) -> ChainMap:
    """Chain map g: source -> target with cover o g = rhs in ``degree``.

    ``cover`` maps target^degree onto the summands ``stalk``; ``rhs`` maps source^degree to them.
    """
    positions = map_positions(source, target)
    index = {p: i for i, p in enumerate(positions)}
    size = len(positions)
    rows = chain_equations(source, target, index)
    values = [ZERO] * len(rows)

    middle = target.term(degree)
    for c, x in enumerate(source.term(degree)):
        for r, b in enumerate(stalk):
            if not x.maps_to(b):
                continue
            row = [ZERO] * size
            for m in range(len(middle)):
                if cover[r][m] and (degree, m, c) in index:
                    row[index[degree, m, c]] += cover[r][m]
            if any(row):
                rows.append(row)
                values.append(rhs[r][c])
            elif rhs[r][c]:
                raise LiftFailure(f"no lift for the component of degree {degree}")

    solution = linalg.solve(rows, values, size) if size else ()
    if solution is None:
        raise LiftFailure(f"augmentation in degree {degree} does not lift")
    return vector_to_map(source, target, positions, solution)


def _resolve(complex_: Complex) -> tuple[Complex, ChainMap]:
    """Minimal projective complex P with a quasi-isomorphism q: P -> complex_."""
    algebra = complex_.algebra
    top = complex_.max_degree
    top_terms = complex_.term(top)
    cover_complex, cover = projective_cover_resolution(algebra, top_terms, top)
    if len(complex_.terms) == 1:
        return cover_complex, ChainMap(cover_complex, complex_, {top: cover})

    below = truncate_le(complex_, top - 1)
    lower, lower_q = _resolve(below)
    lowered = shift(lower, -1)

    # q_B o g = d_Y o q_A[-1] in the top degree
    rhs = compose_blocks(
        complex_.diff(top - 1), lower_q.component(top - 1), lowered.term(top), top_terms
    )
    g = _lift(lowered, cover_complex, top_terms, cover, rhs, top)
    total = cone(g)

    comps: dict[int, Matrix] = {}
    for k, summands in total.terms.items():
        targets = complex_.term(k)
        if not targets:
            continue
        left = len(lower.term(k))
        right = len(cover_complex.term(k))
        rows = []
        for r in range(len(targets)):
            head = lower_q.component(k)[r] if left and k < top else (ZERO,) * left
            tail = cover[r] if k == top else (ZERO,) * right
            rows.append(tuple(head) + tuple(tail))
        comps[k] = tuple(rows)
        assert all(len(row) == len(summands) for row in comps[k])
    q = ChainMap(total, complex_, comps)

    reduced = minimize(total, track=True)
    assert reduced.inclusion is not None
    return reduced.complex, compose_maps(q, reduced.inclusion)


def projective_model(complex_: Complex) -> tuple[Complex, ChainMap]:
    """Minimal projective complex with an explicit quasi-isomorphism onto ``complex_``."""
    if complex_.is_zero:
        empty = zero_complex(complex_.algebra, ComplexKind.PROJECTIVE)
        return empty, ChainMap(empty, complex_, {})
    return _resolve(complex_)


def projectivize(complex_: Complex, check: bool = True) -> Complex:
    """The unique minimal complex of projectives quasi-isomorphic to a bounded complex.

    Args:
        complex_: A complex of injectives or of arbitrary modules
        check: Compare homology of the input and the result

    Returns:
        The projective model in canonical form

    Raises:
        WrongKind: The input is already a complex of projectives
        HomologyMismatch: The model has different homology
    """
    if complex_.kind is ComplexKind.PROJECTIVE:
        raise WrongKind("projectivize expects a complex of injectives or modules")
    model, _ = projective_model(complex_)
    result = canonical_form(model)
    if check and homology(result) != homology(complex_):
        raise HomologyMismatch(f"homology changed while projectivizing {complex_}")
    logger.debug("complex.projectivized", source=str(complex_), result=str(result))
    return result


def injectivize(complex_: Complex, check: bool = True) -> Complex:
    """The minimal complex of injectives quasi-isomorphic to a complex of projectives or modules."""
    if complex_.kind is ComplexKind.INJECTIVE:
        raise WrongKind("injectivize expects a complex of projectives or modules")
    if complex_.is_zero:
        return zero_complex(complex_.algebra, ComplexKind.INJECTIVE)
    model = projectivize(dual_complex(complex_), check=check)
    return canonical_form(dual_complex(model))
