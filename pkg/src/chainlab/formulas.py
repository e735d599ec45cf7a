"""First-order formula trees over relational signatures, plus a textual
syntax with a bit-exact parse/print round trip.

Grammar (prefix keywords, whitespace-separated):

    (= v0 v1)          variable equality
    (rel E v0 v1)      relational atom, symbol first
    (not f)            negation
    (and f g)          binary conjunction
    (or f g)           binary disjunction
    (exists v f)       existential quantification
    (forall v f)       universal quantification

Conjunction and disjunction are binary in the tree; ``and_all``/``or_all``
left-fold longer lists deterministically.  Formulas over a companion use the
reserved symbol names "R" and "U0", "U1", ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from .core import Structure
from .errors import FormulaError, ParseError

Formula = Union["Eq", "Rel", "Not", "And", "Or", "Exists", "Forall"]


@dataclass(frozen=True, slots=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True, slots=True)
class Rel:
    symbol: str
    args: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class Not:
    body: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: Formula


def and_all(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        raise FormulaError("empty conjunction has no rendering")
    return reduce(And, parts)


def or_all(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        raise FormulaError("empty disjunction has no rendering")
    return reduce(Or, parts)


def implies(antecedent: Formula, consequent: Formula) -> Formula:
    return Or(Not(antecedent), consequent)


def falsum(var: str) -> Formula:
    """An always-false quantifier-free formula mentioning only ``var``."""
    return Not(Eq(var, var))


def free_variables(f: Formula) -> frozenset[str]:
    if isinstance(f, Eq):
        return frozenset((f.left, f.right))
    if isinstance(f, Rel):
        return frozenset(f.args)
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, (And, Or)):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, (Exists, Forall)):
        return free_variables(f.body) - {f.var}
    raise FormulaError(f"not a formula node: {f!r}")


def rename_free(f: Formula, mapping: dict[str, str]) -> Formula:
    """Rename free variables.  Intended for quantifier-free formulas or
    renamings that avoid every bound variable; a clash raises."""
    if isinstance(f, Eq):
        return Eq(mapping.get(f.left, f.left), mapping.get(f.right, f.right))
    if isinstance(f, Rel):
        return Rel(f.symbol, tuple(mapping.get(a, a) for a in f.args))
    if isinstance(f, Not):
        return Not(rename_free(f.body, mapping))
    if isinstance(f, And):
        return And(rename_free(f.left, mapping), rename_free(f.right, mapping))
    if isinstance(f, Or):
        return Or(rename_free(f.left, mapping), rename_free(f.right, mapping))
    if isinstance(f, (Exists, Forall)):
        if f.var in mapping or f.var in mapping.values():
            raise FormulaError(f"renaming clashes with bound variable {f.var!r}")
        body = rename_free(f.body, mapping)
        return type(f)(f.var, body)
    raise FormulaError(f"not a formula node: {f!r}")


# ---------------------------------------------------------------------------
# Evaluation


def eval_formula(f: Formula, y: Structure, assignment: dict[str, int]) -> bool:
    """Standard satisfaction over the finite domain; quantifiers iterate the
    whole domain.  Unbound free variables and unknown or misused relation
    symbols raise FormulaError.

    This direct recursion is the trusted oracle for every other evaluation
    path, so it stays deliberately unclever.
    """
    tables = {
        name: (arity, y.relations[i])
        for i, (name, arity) in enumerate(y.sig.symbols)
    }
    env = dict(assignment)

    def run(node: Formula) -> bool:
        if isinstance(node, Eq):
            try:
                return env[node.left] == env[node.right]
            except KeyError as exc:
                raise FormulaError(f"unbound variable {exc.args[0]!r}") from exc
        if isinstance(node, Rel):
            entry = tables.get(node.symbol)
            if entry is None:
                raise FormulaError(f"unknown relation symbol {node.symbol!r}")
            arity, tuples = entry
            if arity != len(node.args):
                raise FormulaError(
                    f"atom {node.symbol!r} has {len(node.args)} arguments, arity is {arity}"
                )
            try:
                point = tuple(env[a] for a in node.args)
            except KeyError as exc:
                raise FormulaError(f"unbound variable {exc.args[0]!r}") from exc
            return point in tuples
        if isinstance(node, Not):
            return not run(node.body)
        if isinstance(node, And):
            return run(node.left) and run(node.right)
        if isinstance(node, Or):
            return run(node.left) or run(node.right)
        if isinstance(node, (Exists, Forall)):
            existential = isinstance(node, Exists)
            var = node.var
            shadowed = env.get(var)
            had = var in env
            try:
                for value in range(y.size):
                    env[var] = value
                    if run(node.body) == existential:
                        return existential
                return not existential
            finally:
                if had:
                    env[var] = shadowed
                else:
                    env.pop(var, None)
        raise FormulaError(f"not a formula node: {node!r}")

    return run(f)


# ---------------------------------------------------------------------------
# Textual syntax


def format_formula(f: Formula) -> str:
    if isinstance(f, Eq):
        return f"(= {f.left} {f.right})"
    if isinstance(f, Rel):
        return "(rel " + " ".join((f.symbol, *f.args)) + ")"
    if isinstance(f, Not):
        return f"(not {format_formula(f.body)})"
    if isinstance(f, And):
        return f"(and {format_formula(f.left)} {format_formula(f.right)})"
    if isinstance(f, Or):
        return f"(or {format_formula(f.left)} {format_formula(f.right)})"
    if isinstance(f, Exists):
        return f"(exists {f.var} {format_formula(f.body)})"
    if isinstance(f, Forall):
        return f"(forall {f.var} {format_formula(f.body)})"
    raise FormulaError(f"not a formula node: {f!r}")


def _tokenize(text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append(c)
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def parse_formula(text: str) -> Formula:
    tokens = _tokenize(text)
    pos = 0

    def expect(token: str) -> None:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != token:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected {token!r}, got {got!r}")
        pos += 1

    def atom() -> str:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] in "()":
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected a name, got {got!r}")
        token = tokens[pos]
        pos += 1
        return token

    def expr() -> Formula:
        nonlocal pos
        expect("(")
        head = atom()
        if head == "=":
            node: Formula = Eq(atom(), atom())
        elif head == "rel":
            symbol = atom()
            args = []
            while pos < len(tokens) and tokens[pos] != ")":
                args.append(atom())
            if not args:
                raise ParseError(f"relational atom {symbol!r} needs arguments")
            node = Rel(symbol, tuple(args))
        elif head == "not":
            node = Not(expr())
        elif head == "and":
            node = And(expr(), expr())
        elif head == "or":
            node = Or(expr(), expr())
        elif head == "exists":
            node = Exists(atom(), expr())
        elif head == "forall":
            node = Forall(atom(), expr())
        else:
            raise ParseError(f"unknown formula keyword {head!r}")
        expect(")")
        return node

    node = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input after formula: {tokens[pos]!r}")
    return node


def distinctness(variables: list[str]) -> Formula | None:
    """Pairwise inequality of the variables; None when fewer than two."""
    pairs = [
        Not(Eq(a, b)) for a, b in itertools.combinations(variables, 2)
    ]
    return and_all(pairs) if pairs else None
