import itertools

import pytest

from chainlab import corpus
from chainlab.core import structure
from chainlab.errors import DomainError, UnsupportedSizeError
from chainlab.morphism import (
    PartialMap,
    canonical_form,
    enumerate_partial_automorphisms,
    find_isomorphism,
    is_partial_automorphism,
)


def brute_force_partial_automorphisms(y, max_dom):
    """Independent oracle: all injective partial maps, filtered."""
    out = []
    for size in range(max_dom + 1):
        for sources in itertools.combinations(range(y.size), size):
            for targets in itertools.permutations(range(y.size), size):
                p = PartialMap(tuple(zip(sources, targets)))
                if is_partial_automorphism(y, p):
                    out.append(p)
    return out


class TestPartialMap:
    def test_repeated_source_rejected(self):
        with pytest.raises(DomainError):
            PartialMap(((0, 1), (0, 2)))

    def test_repeated_target_rejected(self):
        with pytest.raises(DomainError):
            PartialMap(((0, 1), (2, 1)))

    def test_pairs_are_sorted(self):
        assert PartialMap(((2, 3), (0, 1))).pairs == ((0, 1), (2, 3))


class TestIsPartialAutomorphism:
    def test_increasing_map_on_chain(self, chain5):
        assert is_partial_automorphism(chain5, PartialMap.of({0: 1, 2: 3}))

    def test_order_violating_map_on_chain(self, chain5):
        assert not is_partial_automorphism(chain5, PartialMap.of({0: 1, 2: 0}))

    def test_edge_preserving_map_on_cycle(self, c5):
        # All four tuples over {0,1} keep their membership under 0->0, 1->4.
        assert is_partial_automorphism(c5, PartialMap.of({0: 0, 1: 4}))

    def test_out_of_range_rejected(self, c5):
        with pytest.raises(DomainError):
            is_partial_automorphism(c5, PartialMap.of({0: 9}))

    def test_empty_map_always_passes(self, c5):
        assert is_partial_automorphism(c5, PartialMap(()))

    def test_closed_under_restriction(self):
        for y in corpus.all_binary_structures(3) + [corpus.unary_structure(4, [1])]:
            for p in enumerate_partial_automorphisms(y, y.size):
                for r in range(len(p.pairs)):
                    for sub in itertools.combinations(p.pairs, r):
                        assert is_partial_automorphism(y, PartialMap(sub))


class TestEnumeration:
    def test_pure_set_singletons(self):
        y = structure(3, {}, [])
        maps = list(enumerate_partial_automorphisms(y, 1))
        assert len(maps) == 10  # the empty map plus 9 singleton injections
        assert maps[0] == PartialMap(())

    def test_three_chain_count(self):
        # Increasing partial injections of a 3-chain: 1 + 9 + 9 + 1.
        y = corpus.chain_structure(3)
        maps = list(enumerate_partial_automorphisms(y, 3))
        assert len(maps) == 20
        oracle = brute_force_partial_automorphisms(y, 3)
        assert set(maps) == set(oracle)

    def test_unary_mark_must_be_preserved(self):
        y = corpus.unary_structure(2, [0])
        maps = list(enumerate_partial_automorphisms(y, 1))
        assert [m.pairs for m in maps] == [(), ((0, 0),), ((1, 1),)]

    def test_matches_oracle_on_small_structures(self):
        for y in corpus.all_binary_structures(3):
            got = list(enumerate_partial_automorphisms(y, 2))
            assert set(got) == set(brute_force_partial_automorphisms(y, 2))
            assert len(got) == len(set(got))

    def test_lexicographic_order(self, c4):
        maps = [m.pairs for m in enumerate_partial_automorphisms(c4, 2)]
        assert maps == sorted(maps)

    def test_max_dom_above_size_rejected(self, c4):
        with pytest.raises(DomainError):
            list(enumerate_partial_automorphisms(c4, 5))

    def test_chain_reversal_has_same_maps(self):
        for r in range(6):
            fwd = corpus.chain_structure(r)
            bwd = structure(
                r,
                {"lt": [(i, j) for i in range(r) for j in range(r) if i > j]},
                [("lt", 2)],
            )
            assert {p.pairs for p in enumerate_partial_automorphisms(fwd, r)} == {
                p.pairs for p in enumerate_partial_automorphisms(bwd, r)
            }


class TestFindIsomorphism:
    def test_paths_with_different_labels(self):
        a = corpus.path_structure(3)
        b = structure(3, {"E": [(1, 0), (0, 1), (0, 2), (2, 0)]}, [("E", 2)])
        p = find_isomorphism(a, b)
        assert p is not None
        # The middle vertex of a must land on the middle vertex of b (0).
        assert dict(p.pairs)[1] == 0

    def test_cycle_vs_path_absent(self, c5):
        assert find_isomorphism(c5, corpus.path_structure(5)) is None

    def test_identity_case(self, c5):
        assert find_isomorphism(c5, c5) is not None

    def test_signature_mismatch_rejected(self, c5, chain5):
        with pytest.raises(DomainError):
            find_isomorphism(c5, chain5)

    def test_agrees_with_canonical_form(self):
        reps = corpus.all_binary_structures(3)
        for a, b in itertools.combinations(reps[:40], 2):
            assert find_isomorphism(a, b) is None
            assert canonical_form(a) != canonical_form(b)


class TestCanonicalForm:
    def test_relabeling_invariance(self, c5):
        perm = (2, 0, 4, 1, 3)
        relabeled = structure(
            5,
            {"E": [(perm[a], perm[b]) for a, b in c5.relation("E")]},
            [("E", 2)],
        )
        assert canonical_form(c5) == canonical_form(relabeled)

    def test_cycle_differs_from_path(self, c5):
        assert canonical_form(c5) != canonical_form(corpus.path_structure(5))

    def test_pure_set_form(self):
        assert canonical_form(structure(4, {}, [])) == canonical_form(structure(4, {}, []))

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            canonical_form(structure(9, {}, []))

    def test_hex_serialization(self, c5):
        form = canonical_form(c5)
        assert bytes.fromhex(form.hex()) == form.data
