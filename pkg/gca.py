#!/usr/bin/env python3
"""
Planar Galilean Conformal Algebra - structure constants
=======================================================

The centerless algebra G with basis {L_m, H_m, I_m, J_m | m ∈ Z} and
brackets

    [L_m, L_n] = (n-m) L_{m+n}      [L_m, H_n] = n H_{m+n}
    [L_m, I_n] = (n-m) I_{m+n}      [L_m, J_n] = (n-m) J_{m+n}
    [H_m, I_n] = I_{m+n}            [H_m, J_n] = -J_{m+n}

with every other pair of basis elements commuting.

The table below lists one orientation per nonzero kind pair; the other
orientation is obtained by antisymmetry, so bracket(y, x) = -bracket(x, y)
holds by construction.
"""

from enum import Enum
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

from exactnum import ZERO, Scalar, ScalarLike, format_scalar, scalar


class GenKind(Enum):
    """Generator families of G, in the fixed enumeration order L, H, I, J."""
    L = "L"
    H = "H"
    I = "I"
    J = "J"


_KIND_ORDER = {kind: position for position, kind in enumerate(GenKind)}


@dataclass(frozen=True)
class GenRef:
    """
    A basis element of G.

    Attributes:
        kind: Generator family
        index: Integer mode m (any sign)
    """
    kind: GenKind
    index: int

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.index}"


def gen(kind: str, index: int) -> GenRef:
    """Shorthand: gen("L", 2) -> L_2."""
    return GenRef(GenKind(kind), index)


def generators(M: int, kinds: Iterable[GenKind] = tuple(GenKind)) -> Iterator[GenRef]:
    """All generators of the given kinds with |m| <= M, kinds outermost."""
    for kind in kinds:
        for m in range(-M, M + 1):
            yield GenRef(kind, m)


# (kind_x, kind_y) -> (result kind, coefficient as a function of m, n)
_TABLE: Dict[Tuple[GenKind, GenKind], Tuple[GenKind, Callable[[int, int], int]]] = {
    (GenKind.L, GenKind.L): (GenKind.L, lambda m, n: n - m),
    (GenKind.L, GenKind.H): (GenKind.H, lambda m, n: n),
    (GenKind.L, GenKind.I): (GenKind.I, lambda m, n: n - m),
    (GenKind.L, GenKind.J): (GenKind.J, lambda m, n: n - m),
    (GenKind.H, GenKind.I): (GenKind.I, lambda m, n: 1),
    (GenKind.H, GenKind.J): (GenKind.J, lambda m, n: -1),
}


class AlgElement:
    """
    Finite linear combination of basis elements of G.

    Attributes:
        terms: Mapping from GenRef to nonzero Scalar
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[GenRef, ScalarLike]] = None):
        clean = {}
        for g, c in (terms or {}).items():
            c = scalar(c)
            if c:
                clean[g] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgElement is immutable")

    @classmethod
    def of(cls, g: GenRef, coeff: ScalarLike = 1) -> "AlgElement":
        return cls({g: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgElement") -> "AlgElement":
        merged = dict(self.terms)
        for g, c in other.terms.items():
            merged[g] = merged.get(g, ZERO) + c
        return AlgElement(merged)

    def __neg__(self) -> "AlgElement":
        return AlgElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "AlgElement":
        c = scalar(c)
        return AlgElement({g: c * v for g, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: item[0].sort_key)
        return " + ".join(f"{format_scalar(c)}*{g}" for g, c in ordered)


def bracket(x: GenRef, y: GenRef) -> AlgElement:
    """Bracket of two basis elements, read off the structure-constant table."""
    entry = _TABLE.get((x.kind, y.kind))
    if entry is not None:
        kind, coefficient = entry
        return AlgElement({GenRef(kind, x.index + y.index): coefficient(x.index, y.index)})
    entry = _TABLE.get((y.kind, x.kind))
    if entry is not None:
        kind, coefficient = entry
        return AlgElement({GenRef(kind, x.index + y.index): -coefficient(y.index, x.index)})
    return AlgElement()


def bracket_lin(x: AlgElement, y: AlgElement) -> AlgElement:
    """Bilinear extension of ``bracket``."""
    acc: Dict[GenRef, Scalar] = {}
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            for g, c in bracket(gx, gy).terms.items():
                acc[g] = acc.get(g, ZERO) + cx * cy * c
    return AlgElement(acc)


class SubalgebraTag(Enum):
    """Subalgebras of G named by the generator kinds they admit."""
    FULL = "Full"
    WITT = "Witt"
    HEISENBERG_VIRASORO = "HeisenbergVirasoro"
    W22_I = "W22_I"
    W22_J = "W22_J"


ADMITTED_KINDS: Dict[SubalgebraTag, FrozenSet[GenKind]] = {
    SubalgebraTag.FULL: frozenset(GenKind),
    SubalgebraTag.WITT: frozenset({GenKind.L}),
    SubalgebraTag.HEISENBERG_VIRASORO: frozenset({GenKind.L, GenKind.H}),
    SubalgebraTag.W22_I: frozenset({GenKind.L, GenKind.I}),
    SubalgebraTag.W22_J: frozenset({GenKind.L, GenKind.J}),
}


def in_subalgebra(x: AlgElement, tag: SubalgebraTag) -> bool:
    """True iff every basis element occurring in x is admitted by tag."""
    admitted = ADMITTED_KINDS[tag]
    return all(g.kind in admitted for g in x.terms)
