import itertools

import pytest

from chainlab import corpus
from chainlab.chainability import (
    ChainWitness,
    age_forms,
    age_representatives,
    age_subset,
    check_profile_bound,
    check_trace_isomorphism,
    find_chain_order,
    is_chainable_with,
    kernel,
    profile,
)
from chainlab.core import structure
from chainlab.errors import DomainError, UnsupportedSizeError
from chainlab.verify import all_witnesses, chainable_full


class TestIsChainableWith:
    def test_chain_with_natural_order(self, chain5):
        assert is_chainable_with(chain5, ChainWitness.of([], [0, 1, 2, 3, 4]))

    def test_four_cycle_not_chainable_over_empty(self, c4):
        # The map 0->0, 2->1 sends the non-edge (0,2) to the edge (0,1).
        assert not is_chainable_with(c4, ChainWitness.of([], [0, 1, 2, 3]))

    def test_marked_point_frozen(self):
        y = corpus.unary_structure(5, [4])
        for order in itertools.permutations([0, 1, 2, 3]):
            assert is_chainable_with(y, ChainWitness.of([4], order))

    def test_partition_violation_rejected(self, c4):
        with pytest.raises(DomainError):
            is_chainable_with(c4, ChainWitness.of([0], [0, 1, 2, 3]))
        with pytest.raises(DomainError):
            is_chainable_with(c4, ChainWitness.of([0], [1, 2]))

    def test_empty_signature_always_chainable(self):
        y = structure(4, {}, [])
        assert is_chainable_with(y, ChainWitness.of([2], [3, 0, 1]))

    def test_reversal_invariance_exhaustive(self):
        for y in corpus.all_binary_structures(3):
            for w in all_witnesses(y.size):
                reversed_w = ChainWitness(w.f_set, tuple(reversed(w.rest_order)))
                assert is_chainable_with(y, w) == is_chainable_with(y, reversed_w)

    def test_agrees_with_full_quantification(self):
        for y in corpus.all_binary_structures(3):
            for w in all_witnesses(y.size):
                assert is_chainable_with(y, w) == chainable_full(y, w)


class TestEndpointMonotonicity:
    def test_freezing_an_endpoint_preserves_chainability(self):
        for y in corpus.all_binary_structures(3):
            for w in all_witnesses(y.size):
                if not w.rest_order or not is_chainable_with(y, w):
                    continue
                for x in (w.rest_order[0], w.rest_order[-1]):
                    grown = ChainWitness(
                        w.f_set | {x}, tuple(e for e in w.rest_order if e != x)
                    )
                    assert is_chainable_with(y, grown)

    def test_freezing_an_interior_point_can_break_chainability(self):
        # The 3-element linear order is chainable over the empty set, but
        # freezing the middle point leaves the jump 0 -> 2 free to move a
        # related pair onto an unrelated one.  Confirmed by both decision
        # routes; this is why monotonicity is an endpoint property.
        y = corpus.chain_structure(3)
        assert is_chainable_with(y, ChainWitness.of([], [0, 1, 2]))
        broken = ChainWitness.of([1], [0, 2])
        assert not is_chainable_with(y, broken)
        assert not chainable_full(y, broken)


class TestFindChainOrder:
    def test_chain_finds_natural_order(self, chain5):
        assert find_chain_order(chain5, []) == (0, 1, 2, 3, 4)

    def test_five_cycle_has_no_small_witness(self, c5):
        for size in range(4):
            for f in itertools.combinations(range(5), size):
                assert find_chain_order(c5, f) is None

    def test_pure_set_any_f(self):
        y = structure(4, {}, [])
        assert find_chain_order(y, [1, 2]) is not None

    def test_out_of_range_rejected(self, c5):
        with pytest.raises(DomainError):
            find_chain_order(c5, [7])

    def test_found_orders_validate(self):
        for y in corpus.all_binary_structures(3):
            for size in range(y.size + 1):
                for f in itertools.combinations(range(y.size), size):
                    order = find_chain_order(y, f)
                    if order is not None:
                        assert is_chainable_with(y, ChainWitness(frozenset(f), order))
                    else:
                        for perm in itertools.permutations(
                            sorted(set(range(y.size)) - set(f))
                        ):
                            assert not is_chainable_with(y, ChainWitness(frozenset(f), perm))


class TestKernel:
    def test_chain_kernel_is_empty(self):
        report = kernel(corpus.chain_structure(6), 2)
        assert report.min_size == 0
        assert report.minimal_sets[0][0] == ()

    def test_single_mark_kernel(self):
        report = kernel(corpus.unary_structure(5, [2]), 5)
        assert report.min_size == 1
        assert [f for f, _ in report.minimal_sets] == [(2,)]

    def test_five_cycle_kernel(self, c5):
        report = kernel(c5, 4)
        assert report.min_size == 4
        assert len(report.minimal_sets) == 5  # every 4-subset works

    def test_bound_exhausted_reports_failure(self, c5):
        report = kernel(c5, 3)
        assert report.min_size is None
        assert report.minimal_sets == ()
        assert report.search_bound == 3

    def test_bound_above_domain_rejected(self, c5):
        with pytest.raises(DomainError):
            kernel(c5, 6)

    def test_json_shape(self, c5):
        doc = kernel(c5, 4).to_dict()
        assert doc["min_size"] == 4
        assert doc["minimal_sets"][0] == {"f": [0, 1, 2, 3], "order": [4]}

    def test_reported_witnesses_validate(self, c5):
        for f, order in kernel(c5, 4).minimal_sets:
            assert is_chainable_with(c5, ChainWitness(frozenset(f), order))

    def test_empty_signature_kernel_is_empty(self):
        report = kernel(structure(4, {}, []), 4)
        assert report.min_size == 0


class TestDegenerateSizes:
    def test_size_zero_domain(self):
        y = structure(0, {}, [("E", 2)])
        assert is_chainable_with(y, ChainWitness.of([], []))
        assert kernel(y, 0).min_size == 0

    def test_size_one_domain(self):
        y = structure(1, {"E": [(0, 0)]}, [("E", 2)])
        assert is_chainable_with(y, ChainWitness.of([], [0]))
        assert profile(y, 1).values == (1,)


class TestProfile:
    def test_chain_profile_all_ones(self):
        assert profile(corpus.chain_structure(6), 6).values == (1, 1, 1, 1, 1, 1)

    def test_five_cycle_profile(self, c5):
        report = profile(c5, 5)
        assert report.values == (1, 2, 2, 1, 1)
        assert report.values[1] == 2  # edge and non-edge pair types

    def test_pure_set_profile(self):
        assert profile(structure(4, {}, []), 4).values == (1, 1, 1, 1)

    def test_marked_set_profile(self):
        assert profile(corpus.unary_structure(5, [2]), 5).values == (2, 2, 2, 2, 1)

    def test_bound_exceeded_rejected(self, c5):
        with pytest.raises(UnsupportedSizeError):
            profile(c5, 6)

    def test_counts_match_forms(self, c5):
        report = profile(c5, 5)
        assert all(len(forms) == v for forms, v in zip(report.age_forms, report.values))


class TestProfileBound:
    def test_chain_with_zero_kernel(self):
        assert check_profile_bound(corpus.chain_structure(6), 0, 6)

    def test_marked_set_with_kernel_one(self):
        assert check_profile_bound(corpus.unary_structure(5, [2]), 1, 5)

    def test_five_cycle_with_kernel_four(self, c5):
        assert check_profile_bound(c5, 4, 5)

    def test_violation_detected(self, c5):
        assert not check_profile_bound(c5, 0, 5)


class TestTraceIsomorphism:
    def test_single_points_always_agree(self, chain5):
        w = ChainWitness.of([], [0, 1, 2, 3, 4])
        assert check_trace_isomorphism(chain5, w, 1)

    def test_chain_all_sizes(self, chain5):
        w = ChainWitness.of([], [0, 1, 2, 3, 4])
        for n in range(1, 6):
            assert check_trace_isomorphism(chain5, w, n)

    def test_precondition_violation_rejected(self, c4):
        with pytest.raises(DomainError):
            check_trace_isomorphism(c4, ChainWitness.of([], [0, 1, 2, 3]), 2)

    def test_holds_for_all_chainable_witnesses(self):
        for y in corpus.all_binary_structures(3):
            for w in all_witnesses(y.size):
                if is_chainable_with(y, w):
                    for n in range(1, y.size + 1):
                        assert check_trace_isomorphism(y, w, n)


class TestAge:
    def test_substructure_age_contained(self, c5):
        # Removing a vertex from the 5-cycle leaves a 4-path, so every age
        # level of the path embeds.
        z = corpus.path_structure(4)
        for n in range(1, 5):
            assert age_subset(z, c5, n)

    def test_path_pairs_inside_cycle_pairs(self, c5):
        assert age_subset(corpus.path_structure(4), c5, 2)

    def test_missing_type_detected(self, c5):
        empty = corpus.empty_relation_structure(5)
        assert not age_subset(c5, empty, 2)

    def test_signature_mismatch_rejected(self, c5, chain5):
        with pytest.raises(DomainError):
            age_subset(c5, chain5, 2)

    def test_age_forms_counts(self, c5):
        assert len(age_forms(c5, 2)) == 2
        assert len(age_forms(c5, 3)) == 2

    def test_age_representatives_are_deduplicated(self, c5):
        reps = age_representatives(c5, 3)
        assert len(reps) == 2
        from chainlab.morphism import canonical_form

        assert len({canonical_form(r) for r in reps}) == 2
