#!/usr/bin/env python3
"""Tour of the basic objects: finite relational structures, induced
substructures, and local (partial) automorphisms.

Run: python demos/01_structures_and_local_maps.py
"""

from chainlab import (
    PartialMap,
    canonical_form,
    enumerate_partial_automorphisms,
    find_isomorphism,
    induced_substructure,
    is_partial_automorphism,
    structure,
)
from chainlab.corpus import chain_structure, cycle_structure, path_structure

# The five-cycle: a symmetric binary relation on {0,...,4}.
c5 = cycle_structure(5)
print("five-cycle edges:", sorted(c5.relation("E")))

# Restricting to three consecutive vertices leaves a path; domains are
# always relabeled onto an initial segment of the naturals.
sub = induced_substructure(c5, {0, 1, 2})
print("restriction to {0,1,2}:", sorted(sub.relation("E")))

# A partial automorphism is an injective partial map preserving every
# relation in both directions on the tuples it can see.
print()
print("0->0, 1->4 preserves the cycle:", is_partial_automorphism(c5, PartialMap.of({0: 0, 1: 4})))
print("0->1, 1->2 (rotate one step):  ", is_partial_automorphism(c5, PartialMap.of({0: 1, 1: 2})))
print("0->0, 1->3 maps edge to non-edge:", is_partial_automorphism(c5, PartialMap.of({0: 0, 1: 3})))

# On a linear order the partial automorphisms are exactly the increasing
# partial injections; a 3-chain has 1 + 9 + 9 + 1 = 20 of them.
chain3 = chain_structure(3)
maps = list(enumerate_partial_automorphisms(chain3, max_dom=3))
print()
print("partial automorphisms of a 3-chain:", len(maps))
print("first few, in enumeration order:", [m.pairs for m in maps[:5]])

# Isomorphism testing and canonical forms are brute force over all domain
# permutations, which is exact at these sizes.  Equal forms mean isomorphic.
p5 = path_structure(5)
print()
print("C5 isomorphic to P5:", find_isomorphism(c5, p5) is not None)
print("forms differ:", canonical_form(c5) != canonical_form(p5))

perm = (2, 0, 4, 1, 3)
scrambled = structure(5, {"E": [(perm[a], perm[b]) for a, b in c5.relation("E")]}, [("E", 2)])
print("scrambled C5 keeps its form:", canonical_form(scrambled) == canonical_form(c5))
print("and an isomorphism is found:", find_isomorphism(c5, scrambled).pairs)
