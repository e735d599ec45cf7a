#!/usr/bin/env python3
"""Chainability over a frozen set, chain-order search, kernels, profiles.

A structure is chainable over F with respect to a linear order on the rest
when every increasing partial injection of the rest, extended by the
identity on F, is a partial automorphism of the structure.  The less a
structure distinguishes its points, the smaller F can be.

Run: python demos/02_chainability_and_kernels.py
"""

from chainlab import (
    ChainWitness,
    check_profile_bound,
    find_chain_order,
    is_chainable_with,
    kernel,
    profile,
)
from chainlab.corpus import chain_structure, cycle_structure, unary_structure

# A linear order chains itself: the natural order works over an empty F.
chain5 = chain_structure(5)
print("chain over F=(): ", is_chainable_with(chain5, ChainWitness.of([], [0, 1, 2, 3, 4])))

# The four-cycle does not: mapping 0->0, 2->1 carries the non-edge (0,2)
# onto the edge (0,1).
c4 = cycle_structure(4)
print("4-cycle over F=():", is_chainable_with(c4, ChainWitness.of([], [0, 1, 2, 3])))

# find_chain_order backtracks over prefixes with early pruning.
print("search on the chain:", find_chain_order(chain5, []))
print("search on the 4-cycle:", find_chain_order(c4, []))

# A single marked point only needs that point frozen.
marked = unary_structure(5, [2])
print()
print("marked point, F={2}:", find_chain_order(marked, [2]))
report = kernel(marked, 5)
print("kernel report:", report.to_dict())

# The five-cycle is as far from chainable as a 5-point structure can be:
# every frozen set of size four works and nothing smaller does.
c5 = cycle_structure(5)
report = kernel(c5, 4)
print()
print("five-cycle kernel size:", report.min_size)
print("all minimal sets:", [f for f, _ in report.minimal_sets])

# Profiles count isomorphism types of substructures per size.  A kernel of
# size k bounds every profile value by 2**k.
print()
print("five-cycle profile:", profile(c5, 5).values)
print("bound 2^4 respected:", check_profile_bound(c5, 4, 5))
print("chain profile (monomorphic):", profile(chain5, 5).values)
