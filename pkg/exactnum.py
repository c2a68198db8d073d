#!/usr/bin/env python3
"""
Exact Numbers - Gaussian rationals, polynomials and sparse vectors
==================================================================

Every coefficient in the engine is an element of the Gaussian rational
field Q(i), represented by sympy's ``QQ_I`` domain elements. On top of
that this module provides the two containers the rest of the engine
works with:

- UniPoly: a univariate polynomial (the σ / δ data of a module)
- Vector: a sparse linear combination of exponent tuples (module elements)

and the exact polynomial substitutions (x -> x + c) the module actions
are built from.

Conventions:
- A Monomial is a plain tuple of non-negative ints, one entry per slot.
- Vector terms never store a zero coefficient.
- Terms are listed in lexicographic order of the exponent tuple.
"""

# ============================================================================
# IMPORTS AND CONFIGURATION
# ============================================================================

import re
from enum import Enum
from math import comb
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ, QQ_I

from errors import ArityError, ScalarError

Scalar = type(QQ_I(0, 0))
Monomial = Tuple[int, ...]
ScalarLike = Union[Scalar, int, Fraction, str]

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I_UNIT = QQ_I(0, 1)

_RATIONAL = r"\d+(?:/\d+)?"
_SCALAR_FULL = re.compile(
    rf"^(?P<re>[+-]?{_RATIONAL})(?:(?P<sign>[+-])(?P<im>{_RATIONAL})?i)?$"
)
_SCALAR_IMAG = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_RATIONAL})?i$")


# ============================================================================
# SCALARS
# ============================================================================

class ArithOp(Enum):
    """The four field operations."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def rational(numerator: int, denominator: int = 1):
    """Build an element of QQ, rejecting a zero denominator."""
    if denominator == 0:
        raise ScalarError(f"zero denominator in {numerator}/{denominator}")
    return QQ(numerator, denominator)


def scalar(value: ScalarLike = 0, imag: ScalarLike = 0) -> Scalar:
    """Coerce ints, Fractions, literals and existing Scalars to a Scalar."""
    if isinstance(value, Scalar) and not imag:
        return value
    if isinstance(value, str):
        base = parse_scalar(value)
        return base if not imag else base + scalar(imag) * I_UNIT
    if isinstance(imag, (str, Scalar)):
        return scalar(value) + scalar(imag) * I_UNIT
    return QQ_I(_to_qq(value), _to_qq(imag))


def _to_qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Scalar):
        if value.y:
            raise ScalarError(f"expected a rational, got {value}")
        return value.x
    return QQ.convert(value)


def scalar_arith(a: Scalar, b: Scalar, op: ArithOp) -> Scalar:
    """Exact field arithmetic in Q(i); division by zero raises ScalarError."""
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    if not b:
        raise ScalarError(f"division by zero: {format_scalar(a)} / 0")
    return a / b


def power(base: Scalar, exponent: int) -> Scalar:
    """Integer power, negative exponents included."""
    if exponent < 0:
        if not base:
            raise ScalarError("zero raised to a negative power")
        return (ONE / base) ** (-exponent)
    return base ** exponent


def binom(n: int, k: int) -> Scalar:
    """C(n, k) as a Scalar, 0 when k > n or k < 0."""
    if k < 0 or k > n:
        return ZERO
    return QQ_I(comb(n, k), 0)


def _format_rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_scalar(c: Scalar) -> str:
    """Canonical literal: ``3/2``, ``-1i``, ``1/2-3i``."""
    re_part, im_part = c.x, c.y
    if not im_part:
        return _format_rational(re_part)
    imag = _format_rational(abs(im_part)) + "i"
    if not re_part:
        return ("-" if im_part < 0 else "") + imag
    return _format_rational(re_part) + ("-" if im_part < 0 else "+") + imag


def parse_scalar(text: str) -> Scalar:
    """Parse a Gaussian rational literal such as ``-2``, ``1/2+3/4i`` or ``-i``."""
    src = "".join(text.split())
    match = _SCALAR_FULL.match(src)
    if match:
        re_part = _parse_rational(match.group("re"))
        im_part = QQ(0)
        if match.group("sign"):
            im_part = _parse_rational(match.group("im") or "1")
            if match.group("sign") == "-":
                im_part = -im_part
        return QQ_I(re_part, im_part)
    match = _SCALAR_IMAG.match(src)
    if match:
        im_part = _parse_rational(match.group("im") or "1")
        return QQ_I(0, -im_part if match.group("sign") == "-" else im_part)
    raise ScalarError(f"not a Gaussian rational literal: {text!r}")


def _parse_rational(text: str):
    sign = -1 if text.startswith("-") else 1
    body = text.lstrip("+-")
    if "/" in body:
        num, den = body.split("/")
        return rational(sign * int(num), int(den))
    return QQ(sign * int(body))


# ============================================================================
# UNIVARIATE POLYNOMIALS
# ============================================================================

class UniPoly:
    """
    Univariate polynomial with Scalar coefficients, lowest degree first.

    Used for the σ and δ parameters of rank-one modules. Trailing zero
    coefficients are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        values = [scalar(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, value: ScalarLike) -> "UniPoly":
        return cls([value])

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant_term(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else ZERO

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (size - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (size - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def scale(self, c: Scalar) -> "UniPoly":
        return UniPoly(c * x for x in self.coeffs)

    def to_vector(self, arity: int, slot: int) -> "Vector":
        """Embed as a Vector whose only variable sits in ``slot``."""
        terms = {}
        for exponent, c in enumerate(self.coeffs):
            exps = [0] * arity
            exps[slot] = exponent
            terms[tuple(exps)] = c
        return Vector(terms, arity)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exponent, c in enumerate(self.coeffs):
            if not c:
                continue
            if exponent == 0:
                parts.append(format_scalar(c))
                continue
            word = var if exponent == 1 else f"{var}^{exponent}"
            parts.append(word if c == ONE else f"{format_scalar(c)}*{word}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"


# ============================================================================
# SPARSE VECTORS
# ============================================================================

class Vector:
    """
    Sparse linear combination of monomials with Scalar coefficients.

    Attributes:
        terms: Mapping from exponent tuple to nonzero coefficient
        arity: Number of variable slots (2 for a module, 4 for a tensor)
    """

    __slots__ = ("terms", "arity", "_hash")

    def __init__(self, terms: Mapping[Monomial, ScalarLike], arity: int):
        clean: Dict[Monomial, Scalar] = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != arity:
                raise ArityError(f"monomial {mono} does not have arity {arity}")
            if any(e < 0 for e in mono):
                raise ArityError(f"negative exponent in {mono}")
            c = scalar(c)
            if c:
                clean[mono] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def zero(cls, arity: int) -> "Vector":
        return cls({}, arity)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: ScalarLike = 1) -> "Vector":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def _trusted(cls, terms: Dict[Monomial, Scalar], arity: int) -> "Vector":
        # Skips validation; callers guarantee nonzero coefficients and arity.
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "arity", arity)
        object.__setattr__(obj, "_hash", None)
        return obj

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        for mono in sorted(self.terms):
            yield mono, self.terms[mono]

    def coeff(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), ZERO)

    def _check(self, other: "Vector") -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other: "Vector") -> "Vector":
        return vec_combine([(ONE, self), (ONE, other)])

    def __sub__(self, other: "Vector") -> "Vector":
        return vec_combine([(ONE, self), (-ONE, other)])

    def __neg__(self) -> "Vector":
        return Vector._trusted({m: -c for m, c in self.terms.items()}, self.arity)

    def scale(self, c: ScalarLike) -> "Vector":
        c = scalar(c)
        if not c:
            return Vector.zero(self.arity)
        return Vector._trusted({m: c * v for m, v in self.terms.items()}, self.arity)

    def __rmul__(self, c: ScalarLike) -> "Vector":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.arity, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        body = " + ".join(f"{format_scalar(c)}*{m}" for m, c in self.items())
        return f"Vector[{self.arity}]({body or '0'})"


def vec_combine(pairs: Iterable[Tuple[ScalarLike, Vector]]) -> Vector:
    """Exact linear combination in canonical sparse form."""
    acc: Dict[Monomial, Scalar] = {}
    arity: Optional[int] = None
    for c, v in pairs:
        if arity is None:
            arity = v.arity
        elif v.arity != arity:
            raise ArityError(f"cannot combine arity {arity} with arity {v.arity}")
        c = scalar(c)
        if not c:
            continue
        for mono, value in v.terms.items():
            acc[mono] = acc.get(mono, ZERO) + c * value
    if arity is None:
        raise ArityError("vec_combine needs at least one vector to fix the arity")
    return Vector._trusted({m: c for m, c in acc.items() if c}, arity)


# ============================================================================
# POLYNOMIAL SUBSTITUTIONS
# ============================================================================

@lru_cache(maxsize=4096)
def _shift_expansion(exponent: int, amount: Scalar) -> Tuple[Tuple[int, Scalar], ...]:
    # (x + a)^e = sum_k C(e, k) a^(e-k) x^k
    return tuple(
        (k, binom(exponent, k) * power(amount, exponent - k))
        for k in range(exponent + 1)
    )


def shift_slot(v: Vector, slot: int, amount: ScalarLike) -> Vector:
    """Substitute x_slot -> x_slot + amount, expanded binomially."""
    amount = scalar(amount)
    if not amount:
        return v
    acc: Dict[Monomial, Scalar] = {}
    for mono, c in v.terms.items():
        for k, factor in _shift_expansion(mono[slot], amount):
            target = mono[:slot] + (k,) + mono[slot + 1:]
            acc[target] = acc.get(target, ZERO) + c * factor
    return Vector._trusted({m: c for m, c in acc.items() if c}, v.arity)


def mul_var(v: Vector, slot: int, times: int = 1) -> Vector:
    """Multiply by x_slot^times."""
    return Vector._trusted(
        {m[:slot] + (m[slot] + times,) + m[slot + 1:]: c for m, c in v.terms.items()},
        v.arity,
    )


def mul_poly(v: Vector, slot: int, poly: UniPoly) -> Vector:
    """Multiply by a univariate polynomial in the variable of ``slot``."""
    if poly.is_zero():
        return Vector.zero(v.arity)
    return vec_combine(
        (c, mul_var(v, slot, exponent)) for exponent, c in enumerate(poly.coeffs)
    )


def monomials_up_to(arity: int, max_weight: int) -> List[Monomial]:
    """All exponent tuples of the given arity with exponent sum <= max_weight."""
    if max_weight < 0:
        return []
    result: List[Monomial] = []

    def extend(prefix: Tuple[int, ...], budget: int) -> None:
        if len(prefix) == arity:
            result.append(prefix)
            return
        for e in range(budget + 1):
            extend(prefix + (e,), budget - e)

    extend((), max_weight)
    return sorted(result)


def count_monomials(arity: int, max_weight: int) -> int:
    """Number of monomials of weight <= max_weight: C(max_weight + arity, arity)."""
    if max_weight < 0:
        return 0
    return comb(max_weight + arity, arity)
