#!/usr/bin/env python3
"""
Submodule Closure Engine - echelon bases and truncated generation
=================================================================

This module computes weight-truncated submodules generated by seed vectors.
It keeps a reduced row-echelon basis of everything found so far and runs a
FIFO worklist that applies every generator to every newly inserted vector.

Key Components:
- EchelonBasis: reduced row-echelon form over any hashable column labels
- ClosureEngine: deterministic worklist orchestrating one closure run
- ClosureReport: the result, with derivations for replay

Pivot order: a row's pivot is its ≻-largest monomial (weight first), so
the rows whose pivot has weight <= w span the part of the subspace lying in
weight <= w. Results of weight above the cap are discarded and counted.

Membership found in a report is a proof; absence is only evidence at the
given (M, Dcap).
"""

# ============================================================================
# IMPORTS AND CONFIGURATION
# ============================================================================

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from errors import ArityError, ClosureInputError
from exactnum import ONE, ZERO, Scalar, Vector
from gca import GenRef, generators
from settings import SETTINGS
from tensormod import apply_generator, basis_monomials, order_key, vector_weight

logger = logging.getLogger(__name__)

Terms = Dict[Hashable, Scalar]


# ============================================================================
# ECHELON BASIS
# ============================================================================

class EchelonBasis:
    """
    Reduced row-echelon basis of a finite-dimensional subspace.

    Rows are stored keyed by their pivot column. Every row has coefficient 1
    at its own pivot and 0 at every other row's pivot.

    Attributes:
        arity: Arity of the Vectors held, or None for plain linear systems
        key: Column sort key; the pivot of a new row is its key-maximal column
    """

    def __init__(self, arity: Optional[int] = None, key: Callable = order_key):
        self.arity = arity
        self.key = key
        self._rows: Dict[Hashable, Terms] = {}

    def copy(self) -> "EchelonBasis":
        other = EchelonBasis(self.arity, self.key)
        other._rows = {p: dict(row) for p, row in self._rows.items()}
        return other

    # -- core elimination -----------------------------------------------------

    def reduce_terms(self, terms: Mapping[Hashable, Scalar]) -> Terms:
        """Remainder of a row after elimination against every pivot."""
        rem: Terms = dict(terms)
        for pivot, c in terms.items():
            row = self._rows.get(pivot)
            if row is None:
                continue
            for col, value in row.items():
                rem[col] = rem.get(col, ZERO) - c * value
        return {col: value for col, value in rem.items() if value}

    def add_terms(self, terms: Mapping[Hashable, Scalar]) -> Optional[Terms]:
        """Insert a row; return its normalized remainder, or None when dependent."""
        rem = self.reduce_terms(terms)
        if not rem:
            return None
        pivot = max(rem, key=self.key)
        inverse = ONE / rem[pivot]
        new_row = {col: value * inverse for col, value in rem.items()}
        for row in self._rows.values():
            c = row.get(pivot)
            if c:
                for col, value in new_row.items():
                    updated = row.get(col, ZERO) - c * value
                    if updated:
                        row[col] = updated
                    else:
                        row.pop(col, None)
        self._rows[pivot] = new_row
        return dict(new_row)

    # -- vector interface -----------------------------------------------------

    def _check(self, v: Vector) -> None:
        if self.arity is not None and v.arity != self.arity:
            raise ArityError(f"basis holds arity {self.arity}, got arity {v.arity}")

    def insert(self, v: Vector) -> bool:
        """Reduce v and insert the remainder; False when v is already in the span."""
        return self.insert_remainder(v) is not None

    def insert_remainder(self, v: Vector) -> Optional[Vector]:
        self._check(v)
        if self.arity is None:
            self.arity = v.arity
        rem = self.add_terms(v.terms)
        if rem is None:
            return None
        return Vector._trusted(rem, v.arity)

    def member(self, v: Vector) -> bool:
        self._check(v)
        return not self.reduce_terms(v.terms)

    # -- inspection -----------------------------------------------------------

    @property
    def pivots(self) -> frozenset:
        return frozenset(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, pivot: Hashable) -> Terms:
        return dict(self._rows[pivot])

    @property
    def rows(self) -> List[Vector]:
        """Rows ordered by decreasing pivot."""
        ordered = sorted(self._rows, key=self.key, reverse=True)
        return [Vector._trusted(dict(self._rows[p]), self.arity) for p in ordered]

    def weight_profile(self, max_weight: int) -> List[int]:
        """dim(S ∩ F_w) for w = 0..max_weight, read off the graded pivots."""
        weights = [sum(p) for p in self._rows]
        return [sum(1 for w in weights if w <= bound) for bound in range(max_weight + 1)]


def insert(b: EchelonBasis, v: Vector) -> Tuple[EchelonBasis, bool]:
    """Functional insert: returns an updated copy and whether v was new."""
    updated = b.copy()
    added = updated.insert(v)
    return updated, added


def member(b: EchelonBasis, v: Vector) -> bool:
    return b.member(v)


def span_of(vectors: Iterable[Vector], arity: int) -> EchelonBasis:
    """Echelon basis of the span of the given vectors."""
    basis = EchelonBasis(arity)
    for v in vectors:
        basis.insert(v)
    return basis


def weight_profile(b: EchelonBasis, max_weight: int) -> List[int]:
    return b.weight_profile(max_weight)


# ============================================================================
# CLOSURE RUNS
# ============================================================================

class Derivation(NamedTuple):
    """
    How an inserted vector was obtained.

    Exactly one of (seed_index) or (parent, generator) is set: the vector
    came from a seed, or from applying ``generator`` to inserted vector
    number ``parent``.
    """
    seed_index: Optional[int] = None
    parent: Optional[int] = None
    generator: Optional[GenRef] = None


@dataclass
class ClosureReport:
    """
    Outcome of one closure run.

    Attributes:
        basis: Echelon basis of the generated subspace
        dim: Number of basis rows
        saturated: True when the worklist drained (or the whole truncated space was reached)
        gen_range: Index bound M of the generators applied
        weight_cap: Weight cap Dcap
        discarded_count: Actions whose result exceeded Dcap
        remainders: Normalized vectors in insertion order
        derivations: One Derivation per remainder
        attempts: Insert attempts made
        stop_reason: "drained", "full", "targets" or "iteration_cap"
        targets_found: Whether all requested targets became members (None: no targets)
    """
    basis: EchelonBasis
    dim: int
    saturated: bool
    gen_range: int
    weight_cap: int
    discarded_count: int = 0
    remainders: List[Vector] = field(default_factory=list)
    derivations: List[Derivation] = field(default_factory=list)
    attempts: int = 0
    stop_reason: str = "drained"
    targets_found: Optional[bool] = None

    def contains(self, v: Vector) -> bool:
        return self.basis.member(v)

    def weight_profile(self, max_weight: Optional[int] = None) -> List[int]:
        return self.basis.weight_profile(self.weight_cap if max_weight is None else max_weight)


class ClosureEngine:
    """
    Deterministic FIFO closure of seed vectors under the generators of G.

    Generators are applied in the order L, H, I, J with m running from -M to
    M, restricted to the kinds defined on the module.
    """

    def __init__(self, spec, M: int, Dcap: int, iteration_cap: Optional[int] = None):
        if M < 0 or Dcap < 0:
            raise ClosureInputError(f"bounds must be non-negative (M={M}, Dcap={Dcap})")
        if iteration_cap is not None and iteration_cap < 0:
            raise ClosureInputError(f"iteration cap must be non-negative, got {iteration_cap}")
        self.spec = spec
        self.M = M
        self.Dcap = Dcap
        self.iteration_cap = SETTINGS.iteration_cap if iteration_cap is None else iteration_cap
        self.generators = [g for g in generators(M) if g.kind in spec.defined_kinds]
        self.full_dim = len(basis_monomials(spec, Dcap))

    def _validate(self, seeds: Sequence[Vector]) -> None:
        if not seeds:
            raise ClosureInputError("at least one seed is required")
        for v in seeds:
            if v.arity != self.spec.arity:
                raise ArityError(f"seed arity {v.arity} does not match module arity {self.spec.arity}")
            if not v.terms:
                raise ClosureInputError("seeds must be nonzero")
            if vector_weight(v) > self.Dcap:
                raise ClosureInputError(f"seed weight {vector_weight(v)} exceeds Dcap={self.Dcap}")

    def run(self, seeds: Sequence[Vector], targets: Sequence[Vector] = ()) -> ClosureReport:
        self._validate(seeds)
        basis = EchelonBasis(self.spec.arity)
        report = ClosureReport(basis=basis, dim=0, saturated=False, gen_range=self.M, weight_cap=self.Dcap)
        pending = list(targets)
        queue = deque()

        def record(value: Vector, derivation: Derivation) -> bool:
            """Insert; returns True when the run must stop."""
            report.attempts += 1
            remainder = basis.insert_remainder(value)
            if remainder is None:
                return False
            queue.append(len(report.remainders))
            report.remainders.append(remainder)
            report.derivations.append(derivation)
            if basis.dim == self.full_dim:
                report.stop_reason, report.saturated = "full", True
                return True
            if pending:
                pending[:] = [t for t in pending if not basis.member(t)]
                if not pending:
                    report.stop_reason = "targets"
                    return True
            return False

        stopped = False
        for index, seed in enumerate(seeds):
            if record(seed, Derivation(seed_index=index)):
                stopped = True
                break

        while queue and not stopped:
            parent = queue.popleft()
            current = report.remainders[parent]
            for g in self.generators:
                image = apply_generator(self.spec, g, current)
                if not image.terms:
                    continue
                if vector_weight(image) > self.Dcap:
                    report.discarded_count += 1
                    continue
                if report.attempts >= self.iteration_cap:
                    report.stop_reason = "iteration_cap"
                    logger.warning("closure hit the iteration cap (%d attempts)", self.iteration_cap)
                    stopped = True
                    break
                if record(image, Derivation(parent=parent, generator=g)):
                    stopped = True
                    break

        if not stopped:
            report.saturated = True
        report.dim = basis.dim
        if targets:
            report.targets_found = all(basis.member(t) for t in targets)
        logger.info(
            "closure: dim=%d full=%d saturated=%s reason=%s attempts=%d discarded=%d",
            report.dim, self.full_dim, report.saturated, report.stop_reason,
            report.attempts, report.discarded_count,
        )
        return report


def generate(spec, seeds: Sequence[Vector], M: int, Dcap: int,
             targets: Sequence[Vector] = (), iteration_cap: Optional[int] = None) -> ClosureReport:
    """Truncated closure of ``seeds`` (see ClosureEngine)."""
    return ClosureEngine(spec, M, Dcap, iteration_cap).run(seeds, targets)


def replay(spec, seeds: Sequence[Vector], report: ClosureReport,
           indices: Optional[Iterable[int]] = None) -> List[Vector]:
    """
    Rebuild the inserted vectors of a report from its derivations.

    The vectors are recomputed from the seeds and the recorded generator
    words only, in a fresh basis; the result equals ``report.remainders``
    when the run was sound. With ``indices`` only those entries are returned.
    """
    basis = EchelonBasis(spec.arity)
    rebuilt: List[Vector] = []
    for derivation in report.derivations:
        if derivation.seed_index is not None:
            value = seeds[derivation.seed_index]
        else:
            value = apply_generator(spec, derivation.generator, rebuilt[derivation.parent])
        remainder = basis.insert_remainder(value)
        if remainder is None:
            raise ClosureInputError("derivation replay produced a dependent vector")
        rebuilt.append(remainder)
    if indices is None:
        return rebuilt
    return [rebuilt[i] for i in indices]
