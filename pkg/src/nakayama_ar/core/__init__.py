"""Core algebra, complex and triangle modules."""

from nakayama_ar.core.algebra import (
    Interval,
    NakayamaAlgebra,
    a4gamma,
    create_algebra,
    hereditary,
    longrel,
    radsquare,
)
from nakayama_ar.core.ar import AREngine, ARTriangle, create_engine
from nakayama_ar.core.complexes import ChainMap, Complex, ComplexKind, build_complex, shift
from nakayama_ar.core.endomorphisms import decompose, is_isomorphic_k, l_p
from nakayama_ar.core.resolve import injectivize, projectivize

__all__ = [
    "Interval",
    "NakayamaAlgebra",
    "create_algebra",
    "a4gamma",
    "radsquare",
    "longrel",
    "hereditary",
    "AREngine",
    "ARTriangle",
    "create_engine",
    "ChainMap",
    "Complex",
    "ComplexKind",
    "build_complex",
    "shift",
    "decompose",
    "is_isomorphic_k",
    "l_p",
    "projectivize",
    "injectivize",
]
