#!/usr/bin/env python3
"""The three shapes of chaining-order families.

Fix a structure and a frozen set and collect every complement order that
chains it.  The family is always closed under reversal, and at these sizes
always matches one of three patterns: everything, the rotations of a base
order plus reverses, or a fixed middle with freely permuted finite ends.

Run: python demos/05_order_family_shapes.py
"""

from chainlab import classify_family, enumerate_chaining_orders, expand_classification
from chainlab.corpus import chain_structure, pentagon_cyclic_order, unary_structure

# One marked point, frozen: nothing constrains the rest, so every
# arrangement works.
marked = unary_structure(5, [0])
fam = enumerate_chaining_orders(marked, [0])
cls = classify_family(fam)
print("marked point:", len(fam.orders), "orders ->", cls.tag)

# The pentagon's cyclic order is chained exactly by the rotations of the
# circle and their reverses.
pentagon = pentagon_cyclic_order()
fam = enumerate_chaining_orders(pentagon, [])
cls = classify_family(fam)
print("pentagon:", len(fam.orders), "orders ->", cls.tag, "with base", cls.base)
for order in fam.sorted_orders():
    print("   ", order)

# A linear order admits only itself and its reverse: the perturbation shape
# with empty end blocks.
chain5 = chain_structure(5)
fam = enumerate_chaining_orders(chain5, [])
cls = classify_family(fam)
print("chain:", len(fam.orders), "orders ->", cls.tag, "K =", cls.k_set, "H =", cls.h_set)

# Every classification is sound by construction: re-expanding the reported
# pattern reproduces the family exactly.
rest = sorted(set(range(5)) - fam.f_set)
print("expansion rebuilds the family:", expand_classification(cls, rest) == frozenset(fam.orders))
