#!/usr/bin/env python3
"""Quantifier-free definability over a companion, and the translation that
moves formulas from the object language to the companion language.

The companion of a witness is the linear order that lists the frozen
elements first, each carrying its own unary mark.  Chainability over the
witness is equivalent to every relation being a union of literal-type
classes of that companion, and the round trip below exhibits the
equivalence concretely.

Run: python demos/03_definability_round_trip.py
"""

from chainlab import (
    ChainWitness,
    NotSimplyDefinableError,
    apply_definitions,
    companion_as_structure,
    companion_structure,
    eval_formula,
    extract_definitions,
    format_formula,
    literal_type,
    parse_formula,
    render_literal_type,
    star_translate,
    witness_companion,
)
from chainlab.corpus import chain_structure, cycle_structure, unary_structure

# Literal types describe a tuple completely: equalities, order, marks.
x = companion_structure(5, (4,), (0, 1, 2, 3))
t = literal_type(x, (4, 2))
print("type of (4, 2):", t.block_of, t.marks)
print("rendered:", format_formula(render_literal_type(t, ("v0", "v1"))))

# Extraction partitions each relation's tuple space by type and keeps the
# classes meeting the relation; every kept class must lie inside it.
chain5 = chain_structure(5)
x0 = companion_structure(5, (), (0, 1, 2, 3, 4))
defs = extract_definitions(x0, chain5)
print()
print("definition of the order relation:")
for t in defs.types_for("lt"):
    print("   ", format_formula(render_literal_type(t, ("v0", "v1"))))

# Applying the definitions rebuilds the structure exactly.
print("round trip exact:", apply_definitions(x0, defs, chain5.sig) == chain5)

# The four-cycle is not definable over the natural companion: one class
# holds both an edge and a non-edge.
try:
    extract_definitions(companion_structure(4, (), (0, 1, 2, 3)), cycle_structure(4))
except NotSimplyDefinableError as exc:
    print()
    print("4-cycle purity failure:", exc.payload())

# Star translation: object formulas become companion formulas atom by atom,
# and truth transfers between the two sides.
marked = unary_structure(5, [2])
w = ChainWitness.of([2], [0, 1, 3, 4])
xm = witness_companion(w)
defs_m = extract_definitions(xm, marked)
f = parse_formula("(exists v (rel U v))")
translated = star_translate(f, defs_m)
print()
print("object formula:   ", format_formula(f))
print("translated:       ", format_formula(translated))
print("on the structure: ", eval_formula(f, marked, {}))
print("on the companion: ", eval_formula(translated, companion_as_structure(xm), {}))
