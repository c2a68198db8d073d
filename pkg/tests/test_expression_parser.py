#!/usr/bin/env python3
"""
Tests for the expression syntax of module and tensor vectors
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import ExprSyntaxError
from exactnum import Vector, scalar
from expression_parser import Alphabet, display, format_vector, parse_expr, parse_vector
from freemod import ModuleSpec
from tensormod import TensorSpec, basis_monomials

TYPE_I = ModuleSpec.type_i(2, 0, 1)
WITT = ModuleSpec.witt(1, 1)
MIXED = TensorSpec(ModuleSpec.type_i(2, 0, 1), ModuleSpec.type_ii(3, 0, 1))
TYPE_I_PAIR = TensorSpec(ModuleSpec.type_i(2, 0, 5), ModuleSpec.type_i(3, 0, 7))
WITT_PAIR = TensorSpec(ModuleSpec.witt(1, 1), ModuleSpec.witt(1, 2))


def test_parse_tensor_expression():
    v = parse_vector("2*X*Y @ T - 1/2 @ 1", MIXED)
    assert v == Vector({(1, 1, 0, 1): 2, (0, 0, 0, 0): Fraction(-1, 2)}, 4)


def test_complex_literal_is_one_token():
    """Without blanks a complex literal binds; with blanks the minus splits terms"""
    one_term = parse_expr("1/2-3i*X", Alphabet.for_spec(TYPE_I))
    assert len(one_term.terms) == 1
    assert one_term.terms[0].coeff == scalar(Fraction(1, 2), -3)
    two_terms = parse_expr("2 - 3i*X", Alphabet.for_spec(TYPE_I))
    assert len(two_terms.terms) == 2


def test_repeated_variables_and_powers_multiply():
    assert parse_vector("X^2*X*Y", TYPE_I) == Vector.monomial((3, 1))
    assert parse_vector("X + X - 2*X", TYPE_I).is_zero()


def test_right_factor_accepts_both_spellings():
    assert parse_vector("X @ X1", TYPE_I_PAIR) == parse_vector("X @ X", TYPE_I_PAIR)
    assert parse_vector("X @ X", TYPE_I_PAIR) == Vector.monomial((1, 0, 1, 0))


@pytest.mark.parametrize("src, spec, offset, message", [
    ("X + Z", TYPE_I, 4, "unknown variable 'Z'"),
    ("X @ 1", TYPE_I, 2, "'@' is only allowed"),
    ("X", MIXED, 0, "tensor terms need exactly one '@'"),
    ("1 @ X", MIXED, 4, "unknown variable 'X' for the right factor"),
    ("X", WITT, 0, "unknown variable 'X'"),
], ids=["unknown", "at-in-module", "missing-at", "wrong-side", "pinned-slot"])
def test_semantic_errors_carry_offsets(src, spec, offset, message):
    with pytest.raises(ExprSyntaxError) as excinfo:
        parse_vector(src, spec)
    assert excinfo.value.offset == offset
    assert message in str(excinfo.value)


@pytest.mark.parametrize("src", ["X @ Y @ 1", "2*", "X +", "X^", "", "(X)"])
def test_malformed_expressions(src):
    with pytest.raises(ExprSyntaxError):
        parse_vector(src, MIXED if "@" in src else TYPE_I)


def test_format_examples():
    assert format_vector(parse_vector("-2 + X", TYPE_I), TYPE_I) == "X - 2"
    assert format_vector(parse_vector("1/2-3i*Y", TYPE_I), TYPE_I) == "1/2-3i*Y"
    assert format_vector(Vector.zero(4), MIXED) == "0@0"
    assert format_vector(Vector.zero(2), TYPE_I) == "0"
    assert format_vector(parse_vector("Y^2 - 1/2*Y", WITT), WITT) == "Y^2 - 1/2*Y"
    assert format_vector(parse_vector("3*Y @ T + 1 @ S", MIXED), MIXED) == "3*Y @ T + 1 @ S"


def test_display():
    assert display(format_vector(Vector.monomial((1, 0, 0, 0)), MIXED)) == "X ⊗ 1"
    assert display("0@0") == "0⊗0"


gaussian = st.builds(scalar, st.integers(-5, 5), st.sampled_from([0, 0, 1, -2]))


def _vectors(spec, max_weight):
    monos = basis_monomials(spec, max_weight)
    return st.dictionaries(st.sampled_from(monos), gaussian, max_size=5).map(
        lambda terms: Vector(terms, spec.arity))


@pytest.mark.parametrize("spec", [TYPE_I, MIXED, TYPE_I_PAIR, WITT, WITT_PAIR],
                         ids=["typeI", "mixed", "typeI-pair", "witt", "witt-pair"])
@settings(max_examples=200)
@given(data=st.data())
def test_format_parse_round_trip(spec, data):
    v = data.draw(_vectors(spec, 3))
    assert parse_vector(format_vector(v, spec), spec) == v


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
