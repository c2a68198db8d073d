#!/usr/bin/env python3
"""
Tests for the theorem checks: axioms, irreducibility probes, binomial
submodules, degree reduction, determinants and intertwiners
"""

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analysis import (
    ONE_TENSOR, Matching, MinimalKind, ProofMatrix, Verdict, check_invariance,
    classify_iso, classify_rank_one_iso, intertwiner_solve, minimal_kind_for,
    minimal_submodule, minimal_submodule_up_to_weight, probe_rank_one,
    probe_tensor_irreducible, proof_matrix_det, random_vector, reduce_degree,
    reduce_to_constant, vandermonde_obstruction, verify_axioms,
)
from closure import generate, span_of
from errors import DegreeError, HypothesisViolation
from exactnum import UniPoly, Vector, scalar
from freemod import ModuleSpec
from tensormod import DegTuple, TensorSpec, deg, order_gt, pure

X_ = Vector.monomial((1, 0))
Y_ = Vector.monomial((0, 1))

MIXED = TensorSpec(ModuleSpec.type_i(2, 0, 1), ModuleSpec.type_ii(3, 0, 1))
MIXED_EQUAL = TensorSpec(ModuleSpec.type_i(2, 0, 1), ModuleSpec.type_ii(2, 0, 1))
REDUCTION = TensorSpec(ModuleSpec.type_i(2, 0, 5), ModuleSpec.type_i(3, 0, 7))


def _mixed(l1, eta1, s1, l2, eta2, s2):
    return TensorSpec(ModuleSpec.type_i(l1, eta1, s1), ModuleSpec.type_ii(l2, eta2, s2))


def _type_i_pair(l1, eta1, s1, l2, eta2, s2):
    return TensorSpec(ModuleSpec.type_i(l1, eta1, s1), ModuleSpec.type_i(l2, eta2, s2))


# ============================================================================
# AXIOMS
# ============================================================================

def test_axioms_hold_for_shifted_sigma():
    result = verify_axioms(ModuleSpec.type_i(2, 1, UniPoly([1, 1])), 3, 3)
    assert result.holds
    assert result.counterexample is None


def test_degenerate_axiom_grid():
    """m = n = 0 and the monomial 1 only: one check per unordered kind pair"""
    result = verify_axioms(ModuleSpec.type_i(2, 0, 1), 0, 0)
    assert result.holds
    assert result.checked == 10
    assert verify_axioms(ModuleSpec.witt(1, 1), 0, 0).checked == 1


# ============================================================================
# RANK-ONE PROBES
# ============================================================================

@pytest.mark.parametrize("spec", [
    ModuleSpec.type_i(2, 0, 5),
    ModuleSpec.type_ii(3, 1, 2),
    ModuleSpec.witt(2, Fraction(1, 2)),
    ModuleSpec.hvir(1, 0, 2),
], ids=["typeI", "typeII", "witt", "hvir"])
def test_rank_one_irreducible_evidence(spec):
    probe = probe_rank_one(spec)
    assert probe.verdict is Verdict.IRREDUCIBLE_EVIDENCE
    assert probe.dims["spanned"] == probe.dims["target"]
    assert spec.expected_irreducible()


def test_rank_one_sigma_x_witness():
    probe = probe_rank_one(ModuleSpec.type_i(2, 0, UniPoly([0, 1])))
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.witness_seed == X_
    assert not probe.closure.contains(Vector.monomial((0, 0)))


def test_rank_one_type_iii_witness():
    probe = probe_rank_one(ModuleSpec.type_iii(2, UniPoly([0, 1])))
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.witness_seed == X_


def test_rank_one_witt_alpha_zero_witness():
    probe = probe_rank_one(ModuleSpec.witt(3, 0))
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.witness_seed == Y_


def test_rank_one_skips_sigma_heavier_than_dcap():
    """σ = X^7 + 1 cannot seed a weight-6 closure; X still exposes the ideal (X)"""
    spec = ModuleSpec.type_i(2, 0, UniPoly([1, 0, 0, 0, 0, 0, 0, 1]))
    probe = probe_rank_one(spec, 4, 6)
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.witness_seed == X_
    assert probe.dims["skipped_seeds"] == 1
    assert probe.dims["spanned"] == probe.dims["target"]


def test_rank_one_at_weight_zero_cap():
    probe = probe_rank_one(ModuleSpec.type_i(2, 0, UniPoly([0, 1])), 4, 0)
    assert probe.verdict is Verdict.IRREDUCIBLE_EVIDENCE
    assert probe.dims == {"spanned": 1, "target": 0, "skipped_seeds": 3}


def test_rank_one_dims_omit_skips_when_nothing_is_skipped():
    probe = probe_rank_one(ModuleSpec.type_i(2, 0, 5), 3, 4)
    assert "skipped_seeds" not in probe.dims


# ============================================================================
# TENSOR PROBES AND BINOMIAL SUBMODULES
# ============================================================================

def test_tensor_probe_distinct_lambdas():
    probe = probe_tensor_irreducible(MIXED, 4, 3, random_seeds=1, seed=5)
    assert probe.verdict is Verdict.IRREDUCIBLE_EVIDENCE
    assert probe.dims == {"spanned": 35, "target": 35, "seeds_checked": 2}


@pytest.mark.parametrize("ts, kind", [
    (MIXED_EQUAL, MinimalKind.V12),
    (_type_i_pair(2, 0, 1, 2, 1, 3), MinimalKind.W11),
    (TensorSpec(ModuleSpec.witt(1, Fraction(1, 2)), ModuleSpec.witt(1, Fraction(1, 3))), MinimalKind.U5),
], ids=["V12", "W11", "U5"])
def test_tensor_probe_equal_lambdas_certifies_witness(ts, kind):
    assert minimal_kind_for(ts) is kind
    probe = probe_tensor_irreducible(ts, 3, 3)
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.certified
    assert probe.witness_vectors == minimal_submodule_up_to_weight(kind, 5)


def test_tensor_probe_hypotheses():
    witt = TensorSpec(ModuleSpec.witt(1, 1), ModuleSpec.witt(2, 1))
    with pytest.raises(HypothesisViolation):
        probe_tensor_irreducible(witt)
    with pytest.raises(HypothesisViolation):
        probe_tensor_irreducible(_mixed(2, 0, UniPoly([0, 1]), 3, 0, 1))


def test_minimal_submodule_examples():
    assert minimal_submodule(MinimalKind.V12, (0, 1, 0)) == [ONE_TENSOR, pure((0, 1, 0, 0)) + pure((0, 0, 0, 1))]
    assert minimal_submodule(MinimalKind.W11, (1, 0, 1)) == [
        ONE_TENSOR, pure((1, 0, 0, 0)), pure((0, 0, 1, 0)), pure((1, 0, 1, 0)),
    ]
    assert minimal_submodule(MinimalKind.U5, (0, 2, 0)) == [
        ONE_TENSOR,
        pure((0, 1, 0, 0)) + pure((0, 0, 0, 1)),
        Vector({(0, 2, 0, 0): 1, (0, 1, 0, 1): 2, (0, 0, 0, 2): 1}, 4),
    ]
    assert len(minimal_submodule_up_to_weight(MinimalKind.V12, 2)) == 10
    assert len(minimal_submodule_up_to_weight(MinimalKind.U5, 3)) == 4


def test_invariance_examples():
    ts = _mixed(2, 1, 1, 2, -1, 3)
    spanning = minimal_submodule_up_to_weight(MinimalKind.V12, 5)
    assert check_invariance(ts, spanning, 3, 5)
    assert not span_of(spanning, 4).member(pure((0, 1, 0, 0)))

    escaped = check_invariance(ts, [pure((0, 1, 0, 0))], 3, 5)
    assert not escaped
    assert escaped.counterexample is not None

    witt = TensorSpec(ModuleSpec.witt(1, Fraction(1, 2)), ModuleSpec.witt(1, Fraction(1, 3)))
    assert check_invariance(witt, minimal_submodule_up_to_weight(MinimalKind.U5, 5), 3, 5)


U5_POINTS = [
    TensorSpec(ModuleSpec.witt(2, 1), ModuleSpec.witt(2, Fraction(-3, 2))),
    TensorSpec(ModuleSpec.witt(-1, scalar(0, 1)), ModuleSpec.witt(-1, 2)),
    TensorSpec(ModuleSpec.witt(scalar(1, 1), Fraction(1, 4)), ModuleSpec.witt(scalar(1, 1), 0)),
    TensorSpec(ModuleSpec.hvir(1, Fraction(1, 2), 2), ModuleSpec.hvir(1, 3, -1)),
    TensorSpec(ModuleSpec.hvir(2, 0, scalar(0, 2)), ModuleSpec.hvir(2, Fraction(2, 3), 5)),
    TensorSpec(ModuleSpec.hvir(-1, scalar(1, -1), 1), ModuleSpec.hvir(-1, 1, Fraction(1, 3))),
]


@pytest.mark.parametrize("ts", U5_POINTS, ids=["witt1", "witt2", "witt3", "hvir1", "hvir2", "hvir3"])
def test_u5_is_a_proper_submodule(ts):
    spanning = minimal_submodule_up_to_weight(MinimalKind.U5, 5)
    assert check_invariance(ts, spanning, 3, 5)
    assert not span_of(spanning, 4).member(pure((0, 1, 0, 0)))


def test_hvir_pair_has_certified_u5_witness():
    ts = TensorSpec(ModuleSpec.hvir(2, 1, 3), ModuleSpec.hvir(2, Fraction(1, 2), -1))
    assert minimal_kind_for(ts) is MinimalKind.U5
    probe = probe_tensor_irreducible(ts, 3, 3)
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.certified
    assert probe.witness_vectors == minimal_submodule_up_to_weight(MinimalKind.U5, 5)
    assert probe.dims["weight_cap"] == 5


TYPE_II_EQUAL = TensorSpec(ModuleSpec.type_ii(2, 1, 3), ModuleSpec.type_ii(2, -1, 1))


def test_w11_invariance_in_type_ii_pair():
    spanning = minimal_submodule_up_to_weight(MinimalKind.W11, 5)
    assert check_invariance(TYPE_II_EQUAL, spanning, 3, 5)
    assert not span_of(spanning, 4).member(pure((0, 1, 0, 0)))
    assert not span_of(spanning, 4).member(pure((0, 0, 0, 1)))


def test_type_ii_pair_has_certified_w11_witness():
    assert minimal_kind_for(TYPE_II_EQUAL) is MinimalKind.W11
    probe = probe_tensor_irreducible(TYPE_II_EQUAL, 3, 3)
    assert probe.verdict is Verdict.REDUCIBLE_WITNESS
    assert probe.certified
    assert probe.witness_vectors == minimal_submodule_up_to_weight(MinimalKind.W11, 5)


def test_v12_invariance_random_parameters():
    rng = random.Random(17)
    spanning = minimal_submodule_up_to_weight(MinimalKind.V12, 4)
    for _ in range(2):
        lam = rng.choice([2, -1, 3])
        ts = _mixed(lam, rng.randint(-3, 3), rng.randint(1, 4), lam, rng.randint(-3, 3), rng.randint(1, 4))
        assert check_invariance(ts, spanning, 3, 4)


@pytest.mark.slow
def test_v12_invariance_random_parameters_grid():
    rng = random.Random(23)
    spanning = minimal_submodule_up_to_weight(MinimalKind.V12, 5)
    for _ in range(5):
        lam = rng.choice([2, -1, 3, scalar(1, 1)])
        ts = _mixed(lam, rng.randint(-3, 3), rng.randint(1, 4), lam, rng.randint(-3, 3), rng.randint(1, 4))
        assert check_invariance(ts, spanning, 3, 5)


def test_one_tensor_one_generates_v12_up_to_weight_three():
    report = generate(MIXED_EQUAL, [ONE_TENSOR], 4, 5)
    v12 = span_of(minimal_submodule_up_to_weight(MinimalKind.V12, 5), 4)
    assert report.weight_profile(3) == v12.weight_profile(3) == [1, 4, 10, 20]


@pytest.mark.slow
def test_one_tensor_one_generates_v12_up_to_weight_four():
    report = generate(MIXED_EQUAL, [ONE_TENSOR], 4, 6)
    v12 = span_of(minimal_submodule_up_to_weight(MinimalKind.V12, 6), 4)
    assert report.weight_profile(4) == v12.weight_profile(4)


# ============================================================================
# DEGREE REDUCTION
# ============================================================================

def test_reduction_examples():
    x_step = reduce_degree(REDUCTION, pure((1, 0, 0, 0)))
    assert (x_step.case_id, x_step.m) == (1, 0)
    assert x_step.result == ONE_TENSOR.scale(-5)
    assert x_step.after_deg == DegTuple(0, 0, 0, 0)

    y_step = reduce_degree(REDUCTION, pure((0, 1, 0, 0)))
    assert (y_step.case_id, y_step.m) == (2, 1)
    assert y_step.result == ONE_TENSOR.scale(-10)

    s_step = reduce_degree(REDUCTION, pure((0, 0, 1, 0)))
    assert (s_step.case_id, s_step.m) == (3, 0)

    t_step = reduce_degree(REDUCTION, pure((0, 0, 0, 1)))
    assert (t_step.case_id, t_step.m) == (4, 1)
    assert t_step.result == ONE_TENSOR.scale(-21)


def test_reduction_hypotheses():
    with pytest.raises(DegreeError):
        reduce_degree(REDUCTION, ONE_TENSOR)
    with pytest.raises(HypothesisViolation):
        reduce_degree(MIXED, pure((1, 0, 0, 0)))
    with pytest.raises(HypothesisViolation):
        reduce_degree(_type_i_pair(2, 0, 1, 2, 0, 1), pure((1, 0, 0, 0)))
    with pytest.raises(HypothesisViolation):
        reduce_degree(_type_i_pair(2, 0, UniPoly([0, 1]), 3, 0, 1), pure((1, 0, 0, 0)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_reduction_terminates_at_constant(rng_seed):
    """Each step drops deg by one slot unit; iterations = weight of deg(v)"""
    v = random_vector(random.Random(rng_seed), REDUCTION, 3)
    steps = reduce_to_constant(REDUCTION, v)
    assert len(steps) == deg(v).weight
    for step in steps:
        assert order_gt(step.before_deg, step.after_deg)
        assert deg(step.result) == step.after_deg
    final = steps[-1].result if steps else v
    assert deg(final) == DegTuple(0, 0, 0, 0)


def _vector_led_by_slot(rng, slot):
    """Vector whose leading monomial is zero before ``slot`` and positive at it; weight <= 3."""
    exps = [0, 0, 0, 0]
    exps[slot] = rng.randint(1, 2)
    for later in range(slot + 1, 4):
        if sum(exps) < 3:
            exps[later] = rng.randint(0, 1)
    lead = pure(tuple(exps), scalar(rng.randint(1, 3), rng.choice([0, 0, 1])))
    return lead + random_vector(rng, REDUCTION, sum(exps) - 1, terms=rng.randint(1, 3)), sum(exps)


@pytest.mark.parametrize("case_id", [1, 2, 3, 4])
def test_reduction_covers_every_case(case_id):
    """100 vectors entering through each case; every step removes one unit of weight"""
    rng = random.Random(1000 + case_id)
    first_cases = Counter()
    all_cases = Counter()
    for _ in range(100):
        v, weight = _vector_led_by_slot(rng, case_id - 1)
        assert deg(v).weight == weight
        steps = reduce_to_constant(REDUCTION, v)
        assert len(steps) == weight
        first_cases[steps[0].case_id] += 1
        for step in steps:
            all_cases[step.case_id] += 1
            leading_slot = next(i for i, e in enumerate(step.before_deg) if e)
            assert step.case_id == leading_slot + 1
        assert deg(steps[-1].result) == DegTuple(0, 0, 0, 0)
    assert first_cases == Counter({case_id: 100})
    assert all_cases[case_id] >= 100
    assert set(all_cases) <= set(range(case_id, 5))


# ============================================================================
# DETERMINANTS
# ============================================================================

def test_vandermonde_examples():
    result = vandermonde_obstruction(1, 2, 3, 4)
    assert result.det == scalar(12)
    assert not result.factored_zero
    assert vandermonde_obstruction(1, 1, 3, 4).factored_zero
    assert not vandermonde_obstruction(1, 1, 3, 4).det
    assert not vandermonde_obstruction(2, 5, 2, 7).det
    with pytest.raises(HypothesisViolation):
        vandermonde_obstruction(0, 1, 2, 3)


nonzero_gaussian = st.builds(
    scalar, st.integers(-4, 4), st.sampled_from([0, 0, 1, -1, 2]),
).filter(bool)


@settings(max_examples=200)
@given(nonzero_gaussian, nonzero_gaussian, nonzero_gaussian, nonzero_gaussian)
def test_vandermonde_det_matches_product(a, ap, b, bp):
    result = vandermonde_obstruction(a, ap, b, bp)
    assert result.det == result.product
    assert (not result.det) == result.factored_zero


@pytest.mark.parametrize("kind", list(ProofMatrix))
def test_proof_matrices(kind):
    assert proof_matrix_det(kind, 2, 3)
    assert proof_matrix_det(kind, scalar(1, 1), -1)
    assert not proof_matrix_det(kind, 2, 2)


# ============================================================================
# INTERTWINERS AND ISOMORPHISM
# ============================================================================

def test_intertwiner_identity():
    result = intertwiner_solve(MIXED, MIXED, 2, 3)
    assert result.dim >= 1
    assert result.sample
    assert result.unknowns == 15 * 35


def test_intertwiner_eta_obstruction():
    other = _mixed(2, 1, 1, 3, 0, 1)
    assert intertwiner_solve(MIXED, other, 2, 3).dim == 0
    assert intertwiner_solve(other, MIXED, 2, 3).dim == 0


def test_intertwiner_swap_map():
    a = _type_i_pair(2, 0, 3, 5, 1, 7)
    b = a.swapped()
    assert intertwiner_solve(a, b, 2, 3).dim >= 1
    assert intertwiner_solve(a, b, 2, 3).dim == intertwiner_solve(b, a, 2, 3).dim


def test_intertwiner_arity_mismatch():
    with pytest.raises(HypothesisViolation):
        intertwiner_solve(ModuleSpec.type_i(2, 0, 1), MIXED)


def test_classify_examples():
    same = classify_iso(MIXED, _mixed(2, 0, 1, 3, 0, 1))
    assert same.equivalent and same.matching is Matching.ORDERED and same.consistent

    a = _type_i_pair(2, 0, 3, 5, 1, 7)
    swapped = classify_iso(a, a.swapped())
    assert swapped.equivalent and swapped.matching is Matching.SWAPPED
    assert not swapped.obstruction
    assert swapped.consistent

    different = classify_iso(MIXED, _mixed(2, 0, 1, 3, 0, 2))
    assert not different.equivalent
    assert different.matching is Matching.NONE
    assert different.witness_dim == 0
    assert different.consistent

    moved = classify_iso(MIXED, _mixed(5, 0, 1, 3, 0, 1))
    assert not moved.equivalent
    assert moved.witness_dim == 0


def _type_ii_pair(l1, eta1, s1, l2, eta2, s2):
    return TensorSpec(ModuleSpec.type_ii(l1, eta1, s1), ModuleSpec.type_ii(l2, eta2, s2))


def test_classify_type_ii_pairs():
    a = _type_ii_pair(2, 0, 3, 5, 1, 7)
    swapped = classify_iso(a, a.swapped())
    assert swapped.equivalent and swapped.matching is Matching.SWAPPED
    assert swapped.witness_dim >= 1
    assert swapped.consistent

    moved = classify_iso(a, _type_ii_pair(2, 1, 3, 5, 1, 7))
    assert not moved.equivalent
    assert moved.matching is Matching.NONE
    assert moved.witness_dim == 0
    assert moved.consistent


CLASSIFY_GRID = [
    (_type_i_pair(2, 0, 3, 5, 1, 7), _type_i_pair(2, 0, 3, 5, 1, 7), Matching.ORDERED),
    (_type_i_pair(2, 0, 3, 5, 1, 7), _type_i_pair(5, 1, 7, 2, 0, 3), Matching.SWAPPED),
    (_type_i_pair(2, 0, 3, 5, 1, 7), _type_i_pair(2, 2, 3, 5, 1, 7), Matching.NONE),
    (_type_i_pair(2, 0, 3, 5, 1, 7), _type_i_pair(2, 0, 3, 5, -1, 7), Matching.NONE),
    (_type_i_pair(2, 0, 3, 5, 1, 7), _type_i_pair(2, 0, 4, 5, 1, 7), Matching.NONE),
    (_type_i_pair(2, 0, 3, 5, 1, 7), _type_i_pair(-1, 0, 3, 5, 1, 7), Matching.NONE),
    (_type_ii_pair(3, 1, 2, -1, 0, 1), _type_ii_pair(3, 1, 2, -1, 0, 1), Matching.ORDERED),
    (_type_ii_pair(3, 1, 2, -1, 0, 1), _type_ii_pair(-1, 0, 1, 3, 1, 2), Matching.SWAPPED),
    (_type_ii_pair(3, 1, 2, -1, 0, 1), _type_ii_pair(3, -2, 2, -1, 0, 1), Matching.NONE),
    (_type_ii_pair(3, 1, 2, -1, 0, 1), _type_ii_pair(3, 1, 2, -1, 1, 1), Matching.NONE),
    (_type_ii_pair(3, 1, 2, -1, 0, 1), _type_ii_pair(3, 1, 2, -1, 0, 5), Matching.NONE),
    (_type_ii_pair(3, 1, 2, -1, 0, 1), _type_ii_pair(3, 1, 2, 2, 0, 1), Matching.NONE),
]


@pytest.mark.parametrize("a, b, matching", CLASSIFY_GRID, ids=[
    "typeI-same", "typeI-swap", "typeI-eta1", "typeI-eta2", "typeI-sigma", "typeI-lambda",
    "typeII-same", "typeII-swap", "typeII-eta1", "typeII-eta2", "typeII-sigma", "typeII-lambda",
])
def test_classify_same_family_grid(a, b, matching):
    verdict = classify_iso(a, b)
    assert verdict.matching is matching
    assert verdict.equivalent == (matching is not Matching.NONE)
    assert (verdict.witness_dim >= 1) == verdict.equivalent
    assert verdict.consistent


def test_classify_hypotheses():
    with pytest.raises(HypothesisViolation):
        classify_iso(MIXED_EQUAL, MIXED)
    with pytest.raises(HypothesisViolation):
        classify_iso(MIXED, _type_i_pair(2, 0, 1, 3, 0, 1))


def test_classify_rank_one():
    a = ModuleSpec.type_i(2, 0, 1)
    assert classify_rank_one_iso(a, ModuleSpec.type_i(2, 0, 1)).consistent
    other = classify_rank_one_iso(a, ModuleSpec.type_i(2, 1, 1))
    assert not other.equivalent
    assert other.witness_dim == 0
    with pytest.raises(HypothesisViolation):
        classify_rank_one_iso(a, ModuleSpec.type_iii(2, 1))


@pytest.mark.slow
def test_verdicts_match_closed_forms_on_random_grid():
    """20 parameter points: probes and classifications agree with the theorems"""
    rng = random.Random(99)
    for _ in range(20):
        l1, l2 = rng.choice([1, 2, 3]), rng.choice([1, 2, 3])
        ts = _mixed(l1, rng.randint(-2, 2), rng.randint(1, 3), l2, rng.randint(-2, 2), rng.randint(1, 3))
        probe = probe_tensor_irreducible(ts, 4, 2, random_seeds=1)
        expected = l1 != l2
        assert probe.certified
        assert (probe.verdict is Verdict.IRREDUCIBLE_EVIDENCE) == expected
        if expected:
            other = _mixed(l1, rng.randint(-1, 1), 1, l2, 0, 1)
            assert classify_iso(ts, other).consistent


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
