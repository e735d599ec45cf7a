#!/usr/bin/env python3
"""Sentences that pin down the substructure types of a given size.

For a family of pairwise non-isomorphic n-point structures, the age
sentence says: every member is realized by some n distinct points, and
every n distinct points realize some member.  Evaluating it agrees with
directly comparing canonical forms of substructures, which is the library's
cross-check for the whole construction.

Run: python demos/04_age_sentences.py
"""

from chainlab import (
    age_representatives,
    age_sentence,
    check_age_sentence_agreement,
    eval_formula,
    format_formula,
    quotient_translate,
    reduct,
)
from chainlab.core import Signature, structure
from chainlab.corpus import cycle_structure, empty_relation_structure, path_structure

c5 = cycle_structure(5)

# The 2-point types of the five-cycle: an edge and a non-edge.
family = age_representatives(c5, 2)
print("2-point types of C5:", [sorted(k.relation("E")) for k in family])

sentence = age_sentence(family, ["E"])
text = format_formula(sentence)
print("sentence size:", len(text), "characters; head:", text[:88], "...")
print("holds on C5:", eval_formula(sentence, c5, {}))

# Dropping the non-edge type makes the sentence false (C5 realizes it), and
# the evaluator still agrees with the direct canonical-form comparison.
edge_only = [k for k in family if k.relation("E")]
print()
print("edge-only family on C5:", eval_formula(age_sentence(edge_only, ["E"]), c5, {}))
print("evaluator agrees with direct check:", check_age_sentence_agreement(edge_only, ["E"], c5))

# The same family against a structure with no edges at all.
empty4 = empty_relation_structure(4)
print("edge-only family on an edgeless structure:",
      eval_formula(age_sentence(edge_only, ["E"]), empty4, {}))

# Quotient translation: when two symbols have identical interpretations,
# collapsing them preserves truth on the reduct.
sig = Signature((("E", 2), ("Edup", 2)))
edges = path_structure(3).relation("E")
doubled = structure(3, {"E": edges, "Edup": edges}, sig)
f = age_sentence(age_representatives(reduct(doubled, ["Edup"]), 2), ["Edup"])
collapsed = quotient_translate(f, {"Edup": "E"}, sig)
print()
print("doubled-symbol sentence:", eval_formula(f, doubled, {}))
print("collapsed on the reduct:", eval_formula(collapsed, reduct(doubled, ["E"]), {}))
