"""Human names for modules and complexes, and the expression syntax accepted on the command line.

Module expressions are aliases (``P3``, ``I4``, ``S2``, ``M`` over a4gamma) or interval literals
``[a,b]``, optionally followed by a shift suffix ``[k]``. Complex expressions additionally allow
``nu(Y)[k]``, ``nu^-1(Y)[k]`` and full descriptors such as ``0:{P1} 1:{P3} d0=[1]``.
"""

import re
from dataclasses import dataclass, field

from nakayama_ar.core.algebra import Interval, NakayamaAlgebra, a4gamma
from nakayama_ar.core.complexes import (
    Complex,
    homology,
    nu_complex,
    nu_inv_complex,
    parse_descriptor,
    shift,
)
from nakayama_ar.core.endomorphisms import is_isomorphic_k
from nakayama_ar.core.homalg import inj_resolution, proj_resolution
from nakayama_ar.core.resolve import projectivize
from nakayama_ar.errors import ExpressionSyntaxError, UnknownAlias

_WORKED_EXAMPLE = a4gamma()
_M = Interval(2, 3)
_ALIAS = re.compile(r"^(?:(?P<family>[PIS])(?P<vertex>\d+)|(?P<m>M)|\[(?P<lo>\d+),(?P<hi>\d+)\])$")
_SHIFT = re.compile(r"^(?P<body>.*?)\[(?P<shift>-?\d+)\]$")
_FUNCTOR = re.compile(r"^(?P<functor>nu\^-1|nu)\((?P<inner>[^()]*)\)(?:\[(?P<shift>-?\d+)\])?$")


def _is_worked_example(algebra: NakayamaAlgebra) -> bool:
    return (algebra.n, algebra.relations) == (_WORKED_EXAMPLE.n, _WORKED_EXAMPLE.relations)


def module_name(algebra: NakayamaAlgebra, module: Interval) -> str:
    """Preferred alias: P, then I, then S, then M over the worked example, else ``[a,b]``."""
    module = algebra.check(module)
    if algebra.is_projective(module):
        return f"P{module.hi}"
    if algebra.is_injective(module):
        return f"I{module.lo}"
    if module.length == 1:
        return f"S{module.lo}"
    if _is_worked_example(algebra) and module == _M:
        return "M"
    return str(module)


def _with_shift(name: str, k: int) -> str:
    return f"{name}[{k}]" if k else name


def parse_module(algebra: NakayamaAlgebra, text: str) -> Interval:
    """Resolve a module alias or literal."""
    match = _ALIAS.match(text.strip())
    if not match:
        raise ExpressionSyntaxError(f"unknown module expression {text!r}")
    if match.group("m"):
        if not _is_worked_example(algebra):
            raise UnknownAlias("the alias M is only defined for a4gamma")
        return algebra.check(_M)
    if match.group("lo"):
        lo, hi = int(match.group("lo")), int(match.group("hi"))
        if lo > hi:
            raise ExpressionSyntaxError(f"empty interval {text!r}")
        return algebra.check(Interval(lo, hi))
    vertex = int(match.group("vertex"))
    family = match.group("family")
    if family == "P":
        return algebra.projective(vertex)
    if family == "I":
        return algebra.injective(vertex)
    return algebra.simple(vertex)


def parse_expression(algebra: NakayamaAlgebra, text: str) -> Complex:
    """Resolve a complex expression to a complex (of any kind).

    A module with shift ``[k]`` is the projective resolution of the stalk shifted by k.
    """
    text = text.strip()
    if ":" in text or text == "0":
        return parse_descriptor(algebra, text)
    functor = _FUNCTOR.match(text)
    if functor:
        module = parse_module(algebra, functor.group("inner"))
        k = int(functor.group("shift") or 0)
        if functor.group("functor") == "nu":
            return shift(nu_complex(proj_resolution(algebra, module)), k)
        return shift(nu_inv_complex(inj_resolution(algebra, module)), k)
    k = 0
    if not _ALIAS.match(text):
        suffix = _SHIFT.match(text)
        if not suffix:
            raise ExpressionSyntaxError(f"unknown complex expression {text!r}")
        text, k = suffix.group("body"), int(suffix.group("shift"))
    return shift(proj_resolution(algebra, parse_module(algebra, text)), k)


@dataclass
class Namer:
    """Alias ladder for complexes over one algebra.

    Tries a shifted stalk module, then ``nu(Y)[s]``, then ``nu^-1(Y)[s]``, and falls back to the
    descriptor.
    """

    algebra: NakayamaAlgebra
    _nu: dict[Interval, Complex] = field(default_factory=dict)
    _nu_inv: dict[Interval, Complex] = field(default_factory=dict)
    _cache: dict[str, str] = field(default_factory=dict)

    def stalk(self, complex_: Complex) -> tuple[Interval, int] | None:
        """(module, degree) when ``complex_`` is quasi-isomorphic to a stalk."""
        groups = homology(complex_)
        if len(groups) != 1:
            return None
        (degree, counts), = groups.items()
        if sum(counts.values()) != 1:
            return None
        module = next(iter(counts))
        return module, degree

    def _nu_model(self, module: Interval, inverse: bool) -> Complex:
        table = self._nu_inv if inverse else self._nu
        if module not in table:
            if inverse:
                table[module] = nu_inv_complex(inj_resolution(self.algebra, module))
            else:
                table[module] = projectivize(nu_complex(proj_resolution(self.algebra, module)))
        return table[module]

    def _functor_name(self, complex_: Complex, inverse: bool) -> str | None:
        for module in self.algebra.indecomposables():
            model = self._nu_model(module, inverse)
            if model.relative_signature() != complex_.relative_signature():
                continue
            k = model.min_degree - complex_.min_degree
            if is_isomorphic_k(complex_, shift(model, k)):
                functor = "nu^-1" if inverse else "nu"
                return _with_shift(f"{functor}({module_name(self.algebra, module)})", k)
        return None

    def name(self, complex_: Complex) -> str:
        """Alias of a complex of projectives."""
        key = str(complex_)
        if key in self._cache:
            return self._cache[key]
        if complex_.is_zero:
            return "0"
        result = None
        stalk = self.stalk(complex_)
        if stalk is not None:
            module, degree = stalk
            result = _with_shift(module_name(self.algebra, module), -degree)
        if result is None:
            result = self._functor_name(complex_, inverse=False)
        if result is None:
            result = self._functor_name(complex_, inverse=True)
        if result is None:
            result = key
        self._cache[key] = result
        return result
