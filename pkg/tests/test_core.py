import itertools

import pytest

from chainlab import corpus
from chainlab.core import (
    Companion,
    Signature,
    companion_from_dict,
    companion_structure,
    companion_to_dict,
    induced_substructure,
    reduct,
    structure,
    structure_from_dict,
    structure_to_dict,
    validate_companion_axioms,
)
from chainlab.errors import DomainError, ParseError


class TestSignature:
    def test_duplicate_names_rejected(self):
        with pytest.raises(DomainError):
            Signature((("E", 2), ("E", 1)))

    def test_zero_arity_rejected(self):
        with pytest.raises(DomainError):
            Signature((("E", 0),))

    def test_empty_signature_allowed(self):
        assert Signature(()).max_arity() == 0


class TestStructure:
    def test_tuple_outside_domain_rejected(self):
        with pytest.raises(DomainError):
            structure(2, {"E": [(0, 5)]}, [("E", 2)])

    def test_wrong_arity_rejected(self):
        with pytest.raises(DomainError):
            structure(3, {"E": [(0, 1, 2)]}, [("E", 2)])

    def test_repeated_entries_allowed(self):
        y = structure(2, {"E": [(0, 0)]}, [("E", 2)])
        assert (0, 0) in y.relation("E")


class TestInducedSubstructure:
    def test_five_cycle_to_path(self, c5):
        # Hand check: edges of the 5-cycle inside {0,1,2} are 01 and 12.
        sub = induced_substructure(c5, {0, 1, 2})
        assert sub.size == 3
        assert sub.relation("E") == frozenset({(0, 1), (1, 0), (1, 2), (2, 1)})

    def test_full_domain_is_identity(self, c5):
        assert induced_substructure(c5, range(5)) == c5

    def test_chain_restriction_is_chain(self, chain5):
        sub = induced_substructure(chain5, {1, 3})
        assert sub.relation("lt") == frozenset({(0, 1)})

    def test_empty_subset_rejected(self, c5):
        with pytest.raises(DomainError):
            induced_substructure(c5, set())

    def test_out_of_range_rejected(self, c5):
        with pytest.raises(DomainError):
            induced_substructure(c5, {0, 9})

    def test_composition_coherence_exhaustive(self):
        # Restricting twice equals restricting once via the composed subset.
        for y in corpus.all_binary_structures(3) + [corpus.cycle_structure(4)]:
            for r in range(1, y.size + 1):
                for h in itertools.combinations(range(y.size), r):
                    inner = induced_substructure(y, h)
                    hs = sorted(h)
                    for r2 in range(1, inner.size + 1):
                        for g in itertools.combinations(range(inner.size), r2):
                            assert induced_substructure(inner, g) == induced_substructure(
                                y, [hs[i] for i in g]
                            )


class TestReduct:
    def test_keep_one_symbol(self):
        y = structure(3, {"E": [(0, 1)], "U": [(2,)]}, [("E", 2), ("U", 1)])
        r = reduct(y, ["E"])
        assert r.sig.names == ("E",)
        assert r.relation("E") == y.relation("E")

    def test_keep_all_is_identity(self):
        y = structure(3, {"E": [(0, 1)], "U": [(2,)]}, [("E", 2), ("U", 1)])
        assert reduct(y, ["E", "U"]) == y

    def test_keep_none_is_pure_set(self):
        y = structure(3, {"E": [(0, 1)]}, [("E", 2)])
        r = reduct(y, [])
        assert r.sig.symbols == ()
        assert r.size == 3

    def test_unknown_symbol_rejected(self, c5):
        with pytest.raises(DomainError):
            reduct(c5, ["missing"])

    def test_commutes_with_restriction(self):
        y = structure(
            4, {"E": [(0, 1), (2, 3), (1, 1)], "U": [(0,), (3,)]}, [("E", 2), ("U", 1)]
        )
        for r in range(1, 5):
            for h in itertools.combinations(range(4), r):
                for keep in ([], ["E"], ["U"], ["E", "U"]):
                    assert reduct(induced_substructure(y, h), keep) == induced_substructure(
                        reduct(y, keep), h
                    )


class TestCompanion:
    def test_basic_construction(self):
        x = companion_structure(5, (4,), (0, 1, 2, 3))
        assert x.order == (4, 0, 1, 2, 3)
        assert x.constants == (4,)

    def test_no_constants(self):
        x = companion_structure(3, (), (2, 1, 0))
        assert x.order == (2, 1, 0)
        assert x.constants == ()

    def test_two_constants(self):
        x = companion_structure(4, (1, 0), (3, 2))
        assert x.order == (1, 0, 3, 2)
        assert x.constants == (1, 0)

    def test_overlap_rejected(self):
        with pytest.raises(DomainError):
            companion_structure(3, (0,), (0, 1, 2))

    def test_coverage_failure_rejected(self):
        with pytest.raises(DomainError):
            companion_structure(4, (0,), (1, 2))

    def test_constructed_companions_pass_axioms(self):
        for m in range(6):
            for k in range(m + 1):
                for f_enum in itertools.permutations(range(m), k):
                    rest = tuple(e for e in range(m) if e not in f_enum)
                    x = companion_structure(m, f_enum, rest)
                    assert validate_companion_axioms(x) == (True, True, True, True)

    def test_swapped_constants_fail_third_axiom(self):
        x = Companion(3, (0, 1, 2), (1, 0))
        checks = validate_companion_axioms(x)
        assert checks[2] is False

    def test_stray_constant_fails_fourth_axiom(self):
        x = Companion(3, (0, 1, 2), (0, 2))
        checks = validate_companion_axioms(x)
        assert checks[2] is True
        assert checks[3] is False

    def test_rest_property(self):
        x = companion_structure(5, (4,), (0, 2, 1, 3))
        assert x.rest == (0, 2, 1, 3)


class TestSerialization:
    def test_structure_round_trip(self, c5):
        assert structure_from_dict(structure_to_dict(c5)) == c5

    def test_companion_round_trip(self):
        x = companion_structure(5, (4,), (0, 1, 2, 3))
        assert companion_from_dict(companion_to_dict(x)) == x

    def test_malformed_structure_rejected(self):
        with pytest.raises(ParseError):
            structure_from_dict({"size": 3})
        with pytest.raises(ParseError):
            structure_from_dict(
                {"signature": [{"name": "E"}], "size": 3, "relations": {}}
            )

    def test_malformed_companion_rejected(self):
        with pytest.raises(ParseError):
            companion_from_dict({"order": [0, 1]})
