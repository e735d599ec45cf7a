"""Chainability decisions, kernel search, ages and profiles.

A structure is chainable over a frozen set F with respect to a linear order
on the complement when every order-increasing partial injection of the
complement, extended by the identity on F, is a partial automorphism of the
structure.

Quantifying over *all* increasing partial injections is factorially large, so
the decision procedure uses an arity-bound reduction: relation preservation
is checked tuple by tuple, a tuple touches at most max-arity distinct
non-frozen elements, and any violating map restricts to a violating map of
that bounded size.  Hence it suffices to test maps whose domain has at most
max-arity elements.  The reduction is guarded by an exhaustive equivalence
suite against the full-quantification oracle (see verify.py).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import Companion, Structure, companion_structure, induced_substructure
from .errors import DomainError, UnsupportedSizeError
from .morphism import CanonicalForm, _preserves, canonical_form


@dataclass(frozen=True, slots=True)
class ChainWitness:
    """A frozen set together with a linear arrangement of its complement."""

    f_set: frozenset[int]
    rest_order: tuple[int, ...]

    @staticmethod
    def of(f_set: Iterable[int], rest_order: Iterable[int]) -> "ChainWitness":
        return ChainWitness(frozenset(int(x) for x in f_set), tuple(int(x) for x in rest_order))


@dataclass(frozen=True, slots=True)
class KernelReport:
    """Smallest frozen-set size admitting a chaining order, with every
    minimal set and one witness order each.

    ``min_size`` is None when no set within ``search_bound`` works.
    """

    min_size: int | None
    minimal_sets: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    search_bound: int

    def to_dict(self) -> dict:
        return {
            "min_size": self.min_size,
            "minimal_sets": [
                {"f": list(f), "order": list(order)} for f, order in self.minimal_sets
            ],
            "search_bound": self.search_bound,
        }


@dataclass(frozen=True, slots=True)
class ProfileReport:
    """Per-size counts of isomorphism types of induced substructures."""

    values: tuple[int, ...]
    age_forms: tuple[tuple[CanonicalForm, ...], ...]

    def to_dict(self) -> dict:
        return {"values": list(self.values)}


def _validate_witness(y: Structure, w: ChainWitness) -> None:
    rest = list(w.rest_order)
    if w.f_set & set(rest):
        raise DomainError("witness parts overlap")
    if sorted(w.f_set | set(rest)) != list(range(y.size)) or len(set(rest)) != len(rest):
        raise DomainError("witness does not partition the domain")


@lru_cache(maxsize=None)
def _increasing_position_maps(
    length: int, max_size: int
) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Order-preserving partial injections on positions 0..length-1 with
    domain size 1..max_size, smallest domains first.

    An increasing injection is determined by its source set and equal-size
    target set, paired off in order.
    """
    out = []
    for j in range(1, max_size + 1):
        for srcs in itertools.combinations(range(length), j):
            for tgts in itertools.combinations(range(length), j):
                out.append(tuple(zip(srcs, tgts)))
    return tuple(out)


def is_chainable_with(y: Structure, w: ChainWitness) -> bool:
    """Decide chainability of ``y`` over the witness's frozen set with
    respect to its complement order, via the arity-bound reduction.

    Structures over the empty signature are chainable with any witness.
    """
    _validate_witness(y, w)
    bound = y.sig.max_arity()
    if bound == 0:
        return True
    rest = w.rest_order
    base = {a: a for a in w.f_set}
    for posmap in _increasing_position_maps(len(rest), min(bound, len(rest))):
        mapping = dict(base)
        for s, t in posmap:
            mapping[rest[s]] = rest[t]
        if not _preserves(y, mapping):
            return False
    return True


@lru_cache(maxsize=None)
def _frontier_position_maps(
    length: int, max_size: int
) -> tuple[tuple[tuple[int, int], ...], ...]:
    """The subset of _increasing_position_maps(length, max_size) touching the
    last position.  During backtracking only these can newly fail."""
    last = length - 1
    return tuple(
        pm
        for pm in _increasing_position_maps(length, max_size)
        if any(s == last or t == last for s, t in pm)
    )


def find_chain_order(y: Structure, f_set: Iterable[int]) -> tuple[int, ...] | None:
    """First complement order (in backtracking order over ascending
    elements) that chains ``y`` over ``f_set``, or None.

    A prefix is abandoned as soon as some bounded-size increasing map inside
    it breaks preservation; relative order survives extension, so pruned
    prefixes cannot recover.
    """
    f = frozenset(int(x) for x in f_set)
    if not f <= set(range(y.size)):
        raise DomainError(f"f_set {sorted(f)} leaves the domain of size {y.size}")
    rest = sorted(set(range(y.size)) - f)
    bound = y.sig.max_arity()
    if bound == 0:
        return tuple(rest)
    base = {a: a for a in f}

    def prefix_ok(prefix: list[int]) -> bool:
        for posmap in _frontier_position_maps(len(prefix), min(bound, len(prefix))):
            mapping = dict(base)
            for s, t in posmap:
                mapping[prefix[s]] = prefix[t]
            if not _preserves(y, mapping):
                return False
        return True

    prefix: list[int] = []
    remaining = rest

    def extend(remaining: list[int]) -> bool:
        if not remaining:
            return True
        for i, e in enumerate(remaining):
            prefix.append(e)
            if prefix_ok(prefix) and extend(remaining[:i] + remaining[i + 1 :]):
                return True
            prefix.pop()
        return False

    if extend(remaining):
        return tuple(prefix)
    return None


def kernel(y: Structure, max_f: int) -> KernelReport:
    """Exhaustive search for the smallest frozen sets admitting a chaining
    order, over sizes 0..max_f, stopping at the first size that succeeds.

    All sets of the winning size are reported (finite structures may have
    several minimal sets) with one witness order each, sorted by set.
    """
    if max_f > y.size:
        raise DomainError("max_f exceeds the domain size")
    for size in range(max_f + 1):
        found = []
        for f in itertools.combinations(range(y.size), size):
            order = find_chain_order(y, f)
            if order is not None:
                found.append((f, order))
        if found:
            return KernelReport(size, tuple(found), max_f)
    return KernelReport(None, (), max_f)


def witness_companion(w: ChainWitness) -> Companion:
    """The companion induced by a witness: frozen elements first (in sorted
    enumeration order), then the complement in witness order."""
    return companion_structure(
        len(w.f_set) + len(w.rest_order), sorted(w.f_set), w.rest_order
    )


# ---------------------------------------------------------------------------
# Ages and profiles


def profile(y: Structure, up_to: int) -> ProfileReport:
    """Isomorphism-type counts of n-element induced substructures for
    n = 1..up_to.  Bounded by the canonical-form regime (size <= 8)."""
    if up_to > min(y.size, 8):
        raise UnsupportedSizeError(
            f"profile up_to={up_to} exceeds min(size, 8) = {min(y.size, 8)}"
        )
    values = []
    forms_per_n = []
    for n in range(1, up_to + 1):
        forms = {
            canonical_form(induced_substructure(y, h))
            for h in itertools.combinations(range(y.size), n)
        }
        values.append(len(forms))
        forms_per_n.append(tuple(sorted(forms)))
    return ProfileReport(tuple(values), tuple(forms_per_n))


def age_forms(y: Structure, n: int) -> frozenset[CanonicalForm]:
    """Canonical forms of all n-element induced substructures."""
    if not (1 <= n <= y.size):
        raise DomainError(f"age size {n} out of range for domain of size {y.size}")
    if n > 8:
        raise UnsupportedSizeError("age computation capped at substructure size 8")
    return frozenset(
        canonical_form(induced_substructure(y, h))
        for h in itertools.combinations(range(y.size), n)
    )


def age_representatives(y: Structure, n: int) -> tuple[Structure, ...]:
    """One induced n-element substructure per isomorphism type, ordered by
    canonical form.  Suitable as a family for age sentences."""
    if not (1 <= n <= y.size):
        raise DomainError(f"age size {n} out of range for domain of size {y.size}")
    if n > 8:
        raise UnsupportedSizeError("age computation capped at substructure size 8")
    reps: dict[CanonicalForm, Structure] = {}
    for h in itertools.combinations(range(y.size), n):
        sub = induced_substructure(y, h)
        reps.setdefault(canonical_form(sub), sub)
    return tuple(reps[form] for form in sorted(reps))


def check_profile_bound(y: Structure, kernel_size: int, up_to: int) -> bool:
    """Do all profile values up to ``up_to`` stay within 2**kernel_size?"""
    report = profile(y, up_to)
    return all(v <= 2**kernel_size for v in report.values)


def check_trace_isomorphism(y: Structure, w: ChainWitness, n: int) -> bool:
    """For a chainable witness, n-subsets with the same trace on the frozen
    set must induce isomorphic substructures.  Returns the check's outcome;
    a non-chainable witness is a precondition violation and raises."""
    if not is_chainable_with(y, w):
        raise DomainError("witness does not chain the structure")
    if not (1 <= n <= y.size):
        raise DomainError(f"subset size {n} out of range")
    by_trace: dict[frozenset[int], CanonicalForm] = {}
    for h in itertools.combinations(range(y.size), n):
        trace = frozenset(h) & w.f_set
        form = canonical_form(induced_substructure(y, h))
        seen = by_trace.setdefault(trace, form)
        if seen != form:
            return False
    return True


def age_subset(z: Structure, y: Structure, n: int) -> bool:
    """Does every isomorphism type of n-element substructures of ``z`` occur
    in ``y``?  Signatures must agree exactly."""
    if z.sig != y.sig:
        raise DomainError("signature mismatch in age comparison")
    if n > min(z.size, y.size) or n > 8:
        raise DomainError(f"age size {n} out of range for the given structures")
    return age_forms(z, n) <= age_forms(y, n)
