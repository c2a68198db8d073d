#!/usr/bin/env python3
"""
Tensor Product Modules - arity-4 vectors, weight order and Leibniz action
========================================================================

Slots 0-1 carry the left factor's variables, slots 2-3 the right's. The
generators act by the Leibniz rule g(u ⊗ w) = (g u) ⊗ w + u ⊗ (g w).

The weight of an exponent tuple is its coordinate sum. The total order ≻
compares weight first and then the coordinates from the last slot back to
the first; ``order_key`` realizes it as a plain tuple so Python's tuple
comparison does the cascade.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

from errors import ArityError, DegreeError, ModuleSpecError, UndefinedActionError
from exactnum import ONE, ZERO, Monomial, Vector, monomials_up_to, vec_combine
from freemod import ModuleFamily, ModuleSpec, act, monomial_image
from gca import GenKind, GenRef

logger = logging.getLogger(__name__)

TENSOR_ARITY = 4


class TensorShape(Enum):
    """The tensor products the engine analyses."""
    MIXED = "mixed"
    TYPE_I_PAIR = "typeI"
    TYPE_II_PAIR = "typeII"
    WITT_PAIR = "witt"
    HVIR_PAIR = "hvir"


_PAIR_SHAPES = {
    ModuleFamily.TYPE_I: TensorShape.TYPE_I_PAIR,
    ModuleFamily.TYPE_II: TensorShape.TYPE_II_PAIR,
    ModuleFamily.WITT_OMEGA: TensorShape.WITT_PAIR,
    ModuleFamily.HVIR_OMEGA: TensorShape.HVIR_PAIR,
}
_UNRESTRICTED = (ModuleFamily.TYPE_I, ModuleFamily.TYPE_II)


@dataclass(frozen=True)
class TensorSpec:
    """
    Tensor product of two rank-one modules.

    Attributes:
        left: Module of slots 0-1
        right: Module of slots 2-3
    """
    left: ModuleSpec
    right: ModuleSpec

    def __post_init__(self):
        families = (self.left.family, self.right.family)
        if ModuleFamily.TYPE_III in families:
            raise ModuleSpecError("tensor products with TypeIII are not analysed")
        if self.left.is_restricted != self.right.is_restricted:
            raise ModuleSpecError("cannot tensor a Witt/HVir module with a TypeI/TypeII module")

    @property
    def arity(self) -> int:
        return TENSOR_ARITY

    @property
    def shape(self) -> TensorShape:
        if self.left.family == self.right.family:
            return _PAIR_SHAPES[self.left.family]
        if set((self.left.family, self.right.family)) == set(_UNRESTRICTED):
            return TensorShape.MIXED
        # Witt ⊗ HVir: only the Witt generators act on both factors
        return TensorShape.WITT_PAIR

    @property
    def defined_kinds(self) -> FrozenSet[GenKind]:
        return self.left.defined_kinds & self.right.defined_kinds

    @property
    def same_family(self) -> bool:
        return self.left.family == self.right.family

    @property
    def lambdas_equal(self) -> bool:
        return self.left.lam == self.right.lam

    @property
    def is_restricted(self) -> bool:
        return self.left.is_restricted

    @property
    def variables(self) -> Tuple[Optional[str], str, Optional[str], str]:
        """Display names of the four slots (same-family right names get a ``1``)."""
        left = self.left.variables
        right = self.right.variables
        if self.same_family or self.is_restricted:
            right = tuple(None if name is None else name + "1" for name in right)
        return left + right

    def swapped(self) -> "TensorSpec":
        return TensorSpec(self.right, self.left)

    def describe(self) -> str:
        return f"{self.left.describe()}⊗{self.right.describe()}"


class DegTuple(NamedTuple):
    """Exponents (left pair, then right pair) of a tensor monomial."""
    a1: int
    a2: int
    a3: int
    a4: int

    @property
    def weight(self) -> int:
        return self.a1 + self.a2 + self.a3 + self.a4


# ============================================================================
# WEIGHT AND ORDER
# ============================================================================

def weight(mono: Monomial) -> int:
    return sum(mono)


def order_key(mono: Monomial) -> Tuple[int, ...]:
    """Sort key of ≻: (weight, a_n, ..., a_1)."""
    return (sum(mono),) + tuple(reversed(mono))


def order_gt(a: Monomial, b: Monomial) -> bool:
    """True iff a ≻ b."""
    return order_key(a) > order_key(b)


def vector_weight(v: Vector) -> int:
    """Largest weight in the support; -1 for the zero vector."""
    return max((sum(mono) for mono in v.terms), default=-1)


def leading_monomial(v: Vector) -> Monomial:
    """≻-maximal support element of a vector of any arity."""
    if not v.terms:
        raise DegreeError("the zero vector has no degree")
    return max(v.terms, key=order_key)


def deg(v: Vector) -> DegTuple:
    """≻-maximal element of Supp(v) for a tensor vector."""
    if v.arity != TENSOR_ARITY:
        raise ArityError(f"deg expects an arity-{TENSOR_ARITY} vector, got arity {v.arity}")
    return DegTuple(*leading_monomial(v))


# ============================================================================
# TENSOR VECTORS AND ACTION
# ============================================================================

def tensor(u: Vector, w: Vector) -> Vector:
    """u ⊗ w for two module vectors."""
    if u.arity != 2 or w.arity != 2:
        raise ArityError("tensor() combines two arity-2 vectors")
    terms = {}
    for mu, cu in u.terms.items():
        for mw, cw in w.terms.items():
            terms[mu + mw] = cu * cw
    return Vector._trusted(terms, TENSOR_ARITY)


def pure(exps: Tuple[int, int, int, int], coeff=ONE) -> Vector:
    """Monomial X^a1 Y^a2 ⊗ S^a3 T^a4 (names depend on the factors)."""
    return Vector.monomial(exps, coeff)


@lru_cache(maxsize=200_000)
def tensor_monomial_image(ts: TensorSpec, g: GenRef, mono: Monomial) -> Vector:
    left, right = mono[:2], mono[2:]
    left_image = monomial_image(ts.left, g, left)
    right_image = monomial_image(ts.right, g, right)
    terms = {}
    for lm, c in left_image.terms.items():
        key = lm + right
        terms[key] = terms.get(key, ZERO) + c
    for rm, c in right_image.terms.items():
        key = left + rm
        terms[key] = terms.get(key, ZERO) + c
    image = Vector._trusted({m: c for m, c in terms.items() if c}, TENSOR_ARITY)
    logger.debug("expanded %s on %s: %d terms", g, mono, len(image))
    return image


def tact(ts: TensorSpec, g: GenRef, v: Vector) -> Vector:
    """Leibniz action of g on a tensor vector."""
    if g.kind not in ts.defined_kinds:
        raise UndefinedActionError(f"{g.kind.value} is not defined on {ts.describe()}")
    if v.arity != TENSOR_ARITY:
        raise ArityError(f"tact expects arity {TENSOR_ARITY}, got {v.arity}")
    if ts.is_restricted and any(mono[0] or mono[2] for mono in v.terms):
        raise ArityError("restricted tensor vectors must have exponent 0 in slots 0 and 2")
    if not v.terms:
        return v
    return vec_combine((c, tensor_monomial_image(ts, g, mono)) for mono, c in v.terms.items())


def leibniz(ts: TensorSpec, g: GenRef, u: Vector, w: Vector) -> Vector:
    """(g u) ⊗ w + u ⊗ (g w), computed factor-wise through ``act``."""
    return tensor(act(ts.left, g, u), w) + tensor(u, act(ts.right, g, w))


def apply_generator(spec, g: GenRef, v: Vector) -> Vector:
    """Dispatch to ``act`` or ``tact`` depending on the kind of spec."""
    if isinstance(spec, TensorSpec):
        return tact(spec, g, v)
    return act(spec, g, v)


def basis_monomials(spec, max_weight: int) -> List[Monomial]:
    """Monomials of the module (or tensor) of weight <= max_weight."""
    monos = monomials_up_to(spec.arity, max_weight)
    if spec.is_restricted:
        pinned = (0,) if spec.arity == 2 else (0, 2)
        monos = [m for m in monos if not any(m[slot] for slot in pinned)]
    return monos
