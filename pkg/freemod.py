#!/usr/bin/env python3
"""
Rank-One Free Modules - generator actions on polynomial rings
=============================================================

Each rank-one module lives on a polynomial ring in two variables
(slot 0, slot 1). The families and their actions (f = f(slot0, slot1)):

TypeI  Ω(λ,η,σ,0) on C[X,Y]:
    L_m f = λ^m (Y - mX + mη) f(X, Y-m)      H_m f = λ^m X f(X, Y-m)
    I_m f = λ^m σ(X) f(X-1, Y-m)             J_m f = 0
TypeII Ω(λ,η,0,σ) on C[S,T]:
    L_m f = λ^m (T + mS + mη) f(S, T-m)      H_m f = λ^m S f(S, T-m)
    I_m f = 0                                J_m f = λ^m σ(S) f(S+1, T-m)
TypeIII Ω(λ,δ,0,0) on C[P,Q]:
    L_m f = λ^m (Q + mδ(P)) f(P, Q-m)        H_m f = λ^m P f(P, Q-m)
    I_m f = J_m f = 0
WittOmega Ω(λ,α) on C[Y] (slot 0 pinned to exponent 0):
    L_m f = λ^m (Y + mα) f(Y-m)
HVirOmega Ω(λ,α,β): as WittOmega, plus H_m f = βλ^m f(Y-m)

σ multiplies unshifted: it is evaluated at X (resp. S), not at X-1.

Architecture:
- ModuleSpec: frozen, hashable parameter record with validation
- FamilyAction: strategy interface, one implementation per family
- act(): linear extension of the per-monomial images, which are cached
"""

# ============================================================================
# IMPORTS AND CONFIGURATION
# ============================================================================

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Tuple, Union

from errors import ArityError, ModuleSpecError, UndefinedActionError
from exactnum import (
    ONE, ZERO, Monomial, Scalar, ScalarLike, UniPoly, Vector,
    format_scalar, mul_poly, mul_var, power, scalar, shift_slot, vec_combine,
)
from gca import GenKind, GenRef

logger = logging.getLogger(__name__)

MODULE_ARITY = 2
PolyLike = Union[UniPoly, ScalarLike]


# ============================================================================
# MODULE PARAMETERS
# ============================================================================

class ModuleFamily(Enum):
    """Rank-one module families."""
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"
    WITT_OMEGA = "WittOmega"
    HVIR_OMEGA = "HVirOmega"


VARIABLE_NAMES: Dict[ModuleFamily, Tuple[Optional[str], str]] = {
    ModuleFamily.TYPE_I: ("X", "Y"),
    ModuleFamily.TYPE_II: ("S", "T"),
    ModuleFamily.TYPE_III: ("P", "Q"),
    ModuleFamily.WITT_OMEGA: (None, "Y"),
    ModuleFamily.HVIR_OMEGA: (None, "Y"),
}


def _as_poly(value: Optional[PolyLike]) -> Optional[UniPoly]:
    if value is None or isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


@dataclass(frozen=True)
class ModuleSpec:
    """
    Parameters of one rank-one module.

    Attributes:
        family: Which family of actions applies
        lam: λ, nonzero for every family
        eta: η (TypeI/TypeII)
        sigma: σ polynomial in the first variable (TypeI/TypeII), nonzero
        delta: δ polynomial in P (TypeIII)
        alpha: α (WittOmega/HVirOmega)
        beta: β (HVirOmega)
    """
    family: ModuleFamily
    lam: Scalar
    eta: Scalar = ZERO
    sigma: Optional[UniPoly] = None
    delta: Optional[UniPoly] = None
    alpha: Scalar = ZERO
    beta: Scalar = ZERO

    def __post_init__(self):
        for name in ("lam", "eta", "alpha", "beta"):
            object.__setattr__(self, name, scalar(getattr(self, name)))
        object.__setattr__(self, "sigma", _as_poly(self.sigma))
        object.__setattr__(self, "delta", _as_poly(self.delta))

        if not self.lam:
            raise ModuleSpecError("λ must be nonzero")
        if self.family in (ModuleFamily.TYPE_I, ModuleFamily.TYPE_II):
            if self.sigma is None or self.sigma.is_zero():
                raise ModuleSpecError(f"{self.family.value} requires a nonzero σ")
        elif self.sigma is not None:
            raise ModuleSpecError(f"{self.family.value} takes no σ")
        if self.family is ModuleFamily.TYPE_III:
            if self.delta is None:
                raise ModuleSpecError("TypeIII requires δ")
        elif self.delta is not None:
            raise ModuleSpecError(f"{self.family.value} takes no δ")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def type_i(cls, lam: ScalarLike, eta: ScalarLike, sigma: PolyLike) -> "ModuleSpec":
        return cls(ModuleFamily.TYPE_I, lam, eta=eta, sigma=sigma)

    @classmethod
    def type_ii(cls, lam: ScalarLike, eta: ScalarLike, sigma: PolyLike) -> "ModuleSpec":
        return cls(ModuleFamily.TYPE_II, lam, eta=eta, sigma=sigma)

    @classmethod
    def type_iii(cls, lam: ScalarLike, delta: PolyLike) -> "ModuleSpec":
        return cls(ModuleFamily.TYPE_III, lam, delta=delta)

    @classmethod
    def witt(cls, lam: ScalarLike, alpha: ScalarLike) -> "ModuleSpec":
        return cls(ModuleFamily.WITT_OMEGA, lam, alpha=alpha)

    @classmethod
    def hvir(cls, lam: ScalarLike, alpha: ScalarLike, beta: ScalarLike) -> "ModuleSpec":
        return cls(ModuleFamily.HVIR_OMEGA, lam, alpha=alpha, beta=beta)

    # -- properties -----------------------------------------------------------

    @property
    def arity(self) -> int:
        return MODULE_ARITY

    @property
    def variables(self) -> Tuple[Optional[str], str]:
        return VARIABLE_NAMES[self.family]

    @property
    def defined_kinds(self) -> FrozenSet[GenKind]:
        return ACTIONS[self.family].defined_kinds

    @property
    def is_restricted(self) -> bool:
        """True for the Witt / Heisenberg-Virasoro modules (one variable)."""
        return self.family in (ModuleFamily.WITT_OMEGA, ModuleFamily.HVIR_OMEGA)

    def parameter_triple(self) -> Tuple[Scalar, Scalar, Optional[UniPoly]]:
        """(λ, η, σ), the data isomorphism classes are decided on."""
        return (self.lam, self.eta, self.sigma)

    def expected_irreducible(self) -> bool:
        """Closed-form irreducibility condition of the rank-one module."""
        if self.family in (ModuleFamily.TYPE_I, ModuleFamily.TYPE_II):
            return self.sigma.is_constant()
        if self.family is ModuleFamily.TYPE_III:
            return False
        if self.family is ModuleFamily.WITT_OMEGA:
            return bool(self.alpha)
        return bool(self.alpha) or bool(self.beta)

    def describe(self) -> str:
        lam = format_scalar(self.lam)
        if self.family is ModuleFamily.TYPE_I:
            return f"Ω({lam},{format_scalar(self.eta)},{self.sigma.format('X')},0)"
        if self.family is ModuleFamily.TYPE_II:
            return f"Ω({lam},{format_scalar(self.eta)},0,{self.sigma.format('S')})"
        if self.family is ModuleFamily.TYPE_III:
            return f"Ω({lam},{self.delta.format('P')},0,0)"
        if self.family is ModuleFamily.WITT_OMEGA:
            return f"Ω({lam},{format_scalar(self.alpha)})"
        return f"Ω({lam},{format_scalar(self.alpha)},{format_scalar(self.beta)})"


# ============================================================================
# FAMILY ACTIONS
# ============================================================================

def _monomial(mono: Monomial) -> Vector:
    return Vector._trusted({mono: ONE}, len(mono))


class FamilyAction(ABC):
    """Action of the generators of G on the monomials of one family."""

    defined_kinds: FrozenSet[GenKind] = frozenset(GenKind)

    @abstractmethod
    def image(self, spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
        """Image of a single monomial under g; g.kind is a defined kind."""


class TypeIAction(FamilyAction):
    """Ω(λ,η,σ,0): I acts through σ(X), J acts as zero."""

    def image(self, spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
        m = g.index
        if g.kind is GenKind.J:
            return Vector.zero(MODULE_ARITY)
        coeff = power(spec.lam, m)
        shifted = shift_slot(_monomial(mono), 1, -m)
        if g.kind is GenKind.L:
            return vec_combine([
                (coeff, mul_var(shifted, 1)),
                (-m * coeff, mul_var(shifted, 0)),
                (m * coeff * spec.eta, shifted),
            ])
        if g.kind is GenKind.H:
            return mul_var(shifted, 0).scale(coeff)
        return mul_poly(shift_slot(shifted, 0, -1), 0, spec.sigma).scale(coeff)


class TypeIIAction(FamilyAction):
    """Ω(λ,η,0,σ): J acts through σ(S), I acts as zero."""

    def image(self, spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
        m = g.index
        if g.kind is GenKind.I:
            return Vector.zero(MODULE_ARITY)
        coeff = power(spec.lam, m)
        shifted = shift_slot(_monomial(mono), 1, -m)
        if g.kind is GenKind.L:
            return vec_combine([
                (coeff, mul_var(shifted, 1)),
                (m * coeff, mul_var(shifted, 0)),
                (m * coeff * spec.eta, shifted),
            ])
        if g.kind is GenKind.H:
            return mul_var(shifted, 0).scale(coeff)
        return mul_poly(shift_slot(shifted, 0, 1), 0, spec.sigma).scale(coeff)


class TypeIIIAction(FamilyAction):
    """Ω(λ,δ,0,0): only L and H act nontrivially."""

    def image(self, spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
        m = g.index
        if g.kind in (GenKind.I, GenKind.J):
            return Vector.zero(MODULE_ARITY)
        coeff = power(spec.lam, m)
        shifted = shift_slot(_monomial(mono), 1, -m)
        if g.kind is GenKind.L:
            return vec_combine([
                (coeff, mul_var(shifted, 1)),
                (m * coeff, mul_poly(shifted, 0, spec.delta)),
            ])
        return mul_var(shifted, 0).scale(coeff)


class WittAction(FamilyAction):
    """Ω(λ,α): L_m f = λ^m (Y + mα) f(Y - m)."""

    defined_kinds = frozenset({GenKind.L})

    def image(self, spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
        m = g.index
        coeff = power(spec.lam, m)
        shifted = shift_slot(_monomial(mono), 1, -m)
        return vec_combine([
            (coeff, mul_var(shifted, 1)),
            (m * coeff * spec.alpha, shifted),
        ])


class HVirAction(WittAction):
    """Ω(λ,α,β): Witt action plus H_m f = βλ^m f(Y - m)."""

    defined_kinds = frozenset({GenKind.L, GenKind.H})

    def image(self, spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
        if g.kind is GenKind.L:
            return super().image(spec, g, mono)
        shifted = shift_slot(_monomial(mono), 1, -g.index)
        return shifted.scale(spec.beta * power(spec.lam, g.index))


ACTIONS: Dict[ModuleFamily, FamilyAction] = {
    ModuleFamily.TYPE_I: TypeIAction(),
    ModuleFamily.TYPE_II: TypeIIAction(),
    ModuleFamily.TYPE_III: TypeIIIAction(),
    ModuleFamily.WITT_OMEGA: WittAction(),
    ModuleFamily.HVIR_OMEGA: HVirAction(),
}


# ============================================================================
# PUBLIC ACTION
# ============================================================================

@lru_cache(maxsize=200_000)
def monomial_image(spec: ModuleSpec, g: GenRef, mono: Monomial) -> Vector:
    """Cached image of one monomial."""
    image = ACTIONS[spec.family].image(spec, g, mono)
    logger.debug("expanded %s on %s: %d terms", g, mono, len(image))
    return image


def check_vector(spec: ModuleSpec, v: Vector) -> None:
    """Reject vectors that do not live in the module's polynomial ring."""
    if v.arity != MODULE_ARITY:
        raise ArityError(f"{spec.family.value} acts on arity {MODULE_ARITY}, got {v.arity}")
    if spec.is_restricted and any(mono[0] for mono in v.terms):
        raise ArityError(f"{spec.family.value} vectors must have exponent 0 in slot 0")


def act(spec: ModuleSpec, g: GenRef, v: Vector) -> Vector:
    """
    Apply a generator to a module element.

    Kinds that act as zero on the family return the zero vector; kinds the
    family does not define at all raise UndefinedActionError.
    """
    if g.kind not in spec.defined_kinds:
        raise UndefinedActionError(f"{g.kind.value} is not defined on {spec.family.value}")
    check_vector(spec, v)
    if not v.terms:
        return v
    return vec_combine((c, monomial_image(spec, g, mono)) for mono, c in v.terms.items())
