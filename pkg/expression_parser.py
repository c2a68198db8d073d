#!/usr/bin/env python3
"""
Expression Parser - module elements as text
===========================================

Concrete syntax for vectors of a rank-one module or a tensor product:

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := product ['@' product]
    product := atom ('*' atom)*
    atom    := coefficient | var ['^' nat]
    coefficient := rational | rational ('+'|'-') [rational] 'i' | [rational] 'i'
    rational    := nat ['/' nat]

``1`` is the empty monomial. A complex coefficient such as ``1/2-3i`` is a
single token, so it must be written without blanks; ``2 - 3i*X`` is two
terms while ``2-3i*X`` is one. In a tensor context every term carries
exactly one ``@``; the left product uses the left factor's variables and
the right product the right factor's (suffixed names like ``X1`` and the
plain names are both accepted on the right).

Error offsets are byte offsets into the UTF-8 source.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import pyparsing as pp

from errors import ExprSyntaxError, ScalarError
from exactnum import ONE, ZERO, Scalar, Vector, format_scalar, parse_scalar
from tensormod import TensorSpec, order_key

logger = logging.getLogger(__name__)


# ============================================================================
# SYNTAX TREE
# ============================================================================

@dataclass(frozen=True)
class Factor:
    """One powered variable, with the byte offset of its name."""
    name: str
    exponent: int
    offset: int


@dataclass(frozen=True)
class Term:
    """
    Attributes:
        coeff: Product of every coefficient literal and the leading sign
        left: Factors before ``@`` (or of the only product)
        right: Factors after ``@``; None when the term has no ``@``
        offset: Byte offset where the term starts
        at_offset: Byte offset of ``@``, if present
    """
    coeff: Scalar
    left: Tuple[Factor, ...]
    right: Optional[Tuple[Factor, ...]]
    offset: int
    at_offset: Optional[int] = None


@dataclass(frozen=True)
class ExprAST:
    terms: Tuple[Term, ...]

    def lower(self, alphabet: "Alphabet") -> Vector:
        """The Vector denoted by the expression (terms are summed)."""
        alphabet.validate(self)
        result: Dict[Tuple[int, ...], Scalar] = {}
        for term in self.terms:
            exps = [0] * alphabet.arity
            for factor in term.left:
                exps[alphabet.left[factor.name]] += factor.exponent
            for factor in term.right or ():
                exps[alphabet.right[factor.name]] += factor.exponent
            key = tuple(exps)
            result[key] = result.get(key, ZERO) + term.coeff
        return Vector(result, alphabet.arity)


# ============================================================================
# ALPHABETS
# ============================================================================

class Alphabet:
    """
    Variable names accepted for one module or tensor product.

    Attributes:
        arity: 2 for a module, 4 for a tensor
        names: Canonical display name of each slot (None for pinned slots)
        left: Name -> slot for the only (or left) product
        right: Name -> slot for the right product; None for a single module
    """

    def __init__(self, names: Tuple[Optional[str], ...], left: Dict[str, int],
                 right: Optional[Dict[str, int]] = None):
        self.names = names
        self.arity = len(names)
        self.left = left
        self.right = right

    @classmethod
    def for_spec(cls, spec) -> "Alphabet":
        if isinstance(spec, TensorSpec):
            names = spec.variables
            left = {name: slot for slot, name in enumerate(names[:2]) if name}
            right = {name: slot + 2 for slot, name in enumerate(spec.right.variables) if name}
            right.update({name: slot + 2 for slot, name in enumerate(names[2:]) if name})
            return cls(names, left, right)
        names = spec.variables
        return cls(names, {name: slot for slot, name in enumerate(names) if name})

    @property
    def is_tensor(self) -> bool:
        return self.right is not None

    def validate(self, ast: ExprAST) -> None:
        for term in ast.terms:
            if self.is_tensor and term.right is None:
                raise ExprSyntaxError("tensor terms need exactly one '@'", term.offset)
            if not self.is_tensor and term.right is not None:
                raise ExprSyntaxError("'@' is only allowed for tensor products", term.at_offset)
            for factor in term.left:
                if factor.name not in self.left:
                    side = "left factor" if self.is_tensor else "module"
                    raise ExprSyntaxError(f"unknown variable {factor.name!r} for the {side}", factor.offset)
            for factor in term.right or ():
                if factor.name not in self.right:
                    raise ExprSyntaxError(f"unknown variable {factor.name!r} for the right factor", factor.offset)


# ============================================================================
# GRAMMAR
# ============================================================================

def _byte_offset(s: str, loc: int) -> int:
    return len(s[:loc].encode("utf-8"))


class _Name:
    __slots__ = ("text", "offset")

    def __init__(self, text: str, offset: int):
        self.text = text
        self.offset = offset


class _At:
    __slots__ = ("offset",)

    def __init__(self, offset: int):
        self.offset = offset


def _scalar_action(s, loc, toks):
    try:
        return parse_scalar("".join(toks[0].split()))
    except ScalarError as exc:
        raise pp.ParseFatalException(s, loc, str(exc))


def _power_action(s, loc, toks):
    name = toks[0]
    exponent = int(toks[1]) if len(toks) > 1 else 1
    return Factor(name.text, exponent, name.offset)


def _term_action(s, loc, toks):
    coeff = -ONE if toks.get("sign") == "-" else ONE
    left: List[Factor] = []
    right: Optional[List[Factor]] = None
    for item in toks["left"]:
        if isinstance(item, Factor):
            left.append(item)
        else:
            coeff = coeff * item
    at = toks.get("at")
    if at is not None:
        right = []
        for item in toks["right"]:
            if isinstance(item, Factor):
                right.append(item)
            else:
                coeff = coeff * item
    return Term(coeff, tuple(left), None if right is None else tuple(right),
                _byte_offset(s, loc), at.offset if at is not None else None)


def _build_grammar() -> pp.ParserElement:
    tail = r"(?![A-Za-z0-9_])"
    complex_lit = pp.Regex(r"\d+(?:/\d+)?[+-](?:\d+(?:/\d+)?)?i" + tail)
    imag_lit = pp.Regex(r"(?:\d+(?:/\d+)?)?i" + tail)
    rational = pp.Regex(r"\d+(?:\s*/\s*\d+)?")
    coefficient = (complex_lit | imag_lit | rational).set_parse_action(_scalar_action)

    nat = pp.Regex(r"\d+")
    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*").set_parse_action(
        lambda s, loc, toks: _Name(toks[0], _byte_offset(s, loc)))
    power = (name + pp.Opt(pp.Suppress("^") + nat)).set_parse_action(_power_action)

    atom = coefficient | power
    product = atom + pp.ZeroOrMore(pp.Suppress("*") + atom)
    at = pp.Literal("@").set_parse_action(lambda s, loc, toks: _At(_byte_offset(s, loc)))
    body = pp.Group(product)("left") + pp.Opt(at("at") + pp.Group(product)("right"))
    sign = pp.one_of("+ -")

    first = (pp.Opt(sign("sign")) + body).set_parse_action(_term_action)
    following = (sign("sign") + body).set_parse_action(_term_action)
    grammar = first + pp.ZeroOrMore(following) + pp.StringEnd()
    return grammar.parse_with_tabs()


_GRAMMAR = _build_grammar()


# ============================================================================
# PUBLIC API
# ============================================================================

def parse_expr(src: str, alphabet: Alphabet) -> ExprAST:
    """Parse and check an expression against an alphabet."""
    try:
        terms = _GRAMMAR.parse_string(src, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ExprSyntaxError(f"cannot parse expression: {exc.msg}", _byte_offset(src, exc.loc)) from None
    ast = ExprAST(tuple(terms))
    alphabet.validate(ast)
    logger.debug("parsed %d term(s) from %r", len(ast.terms), src)
    return ast


def parse_vector(src: str, spec) -> Vector:
    """Text -> Vector for a ModuleSpec or TensorSpec."""
    alphabet = Alphabet.for_spec(spec)
    return parse_expr(src, alphabet).lower(alphabet)


def monomial_word(exps: Tuple[int, ...], names: Tuple[Optional[str], ...]) -> str:
    parts = []
    for exponent, name in zip(exps, names):
        if exponent == 1:
            parts.append(name)
        elif exponent:
            parts.append(f"{name}^{exponent}")
    return "*".join(parts) or "1"


def _is_negative(c: Scalar) -> bool:
    return c.x < 0 or (not c.x and c.y < 0)


def _side(coeff_text: str, word: str) -> str:
    if not coeff_text:
        return word
    return coeff_text if word == "1" else f"{coeff_text}*{word}"


def format_vector(v: Vector, spec) -> str:
    """
    Canonical text of a vector, leading monomial first.

    The output parses back (``parse_vector``) to an equal Vector.
    """
    alphabet = Alphabet.for_spec(spec)
    if not v.terms:
        return "0@0" if alphabet.is_tensor else "0"
    pieces = []
    for index, mono in enumerate(sorted(v.terms, key=order_key, reverse=True)):
        c = v.terms[mono]
        negative = _is_negative(c)
        magnitude = -c if negative else c
        coeff_text = "" if magnitude == ONE else format_scalar(magnitude)
        if alphabet.is_tensor:
            text = _side(coeff_text, monomial_word(mono[:2], alphabet.names[:2])) + " @ " + monomial_word(mono[2:], alphabet.names[2:])
        else:
            text = _side(coeff_text, monomial_word(mono, alphabet.names))
        if index == 0:
            pieces.append(("-" if negative else "") + text)
        else:
            pieces.append((" - " if negative else " + ") + text)
    return "".join(pieces)


def display(text: str) -> str:
    """Human-readable rendering: ``@`` becomes ``⊗``."""
    return text.replace(" @ ", " ⊗ ").replace("@", "⊗")
