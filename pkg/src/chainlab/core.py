"""Finite relational structures and their ordered companions.

A structure is a finite domain {0, ..., m-1} together with one tuple-set per
relation symbol of a fixed signature.  Domains are always initial segments of
the naturals and substructures are relabeled order-preservingly, so that
structure equality is plain syntactic equality and isomorphism classes can be
keyed by canonical forms.

A companion is a linear rearrangement of the same domain in which a chosen
enumeration of "frozen" elements forms an initial segment, each one marked by
its own unary predicate.  The implied language has one binary symbol (the
order) and one unary symbol per marked element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError


@dataclass(frozen=True, slots=True)
class Signature:
    """An ordered list of (name, arity) relation symbols.

    Symbol order is significant and preserved by every operation, so two
    structures are equal only when their signatures agree symbol-for-symbol.
    """

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate symbol names in signature: {names}")
        for name, arity in self.symbols:
            if not isinstance(name, str) or not name:
                raise DomainError(f"symbol name must be a non-empty string: {name!r}")
            if not isinstance(arity, int) or arity < 1:
                raise DomainError(f"arity of {name!r} must be a positive integer")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    def arity(self, name: str) -> int:
        for sym, ar in self.symbols:
            if sym == name:
                return ar
        raise DomainError(f"unknown symbol {name!r}")

    def index(self, name: str) -> int:
        for i, (sym, _) in enumerate(self.symbols):
            if sym == name:
                return i
        raise DomainError(f"unknown symbol {name!r}")

    def max_arity(self) -> int:
        return max((ar for _, ar in self.symbols), default=0)


def signature(pairs: Iterable[tuple[str, int]]) -> Signature:
    return Signature(tuple((str(n), int(a)) for n, a in pairs))


@dataclass(frozen=True, slots=True)
class Structure:
    """A finite relational structure on domain {0, ..., size-1}.

    ``relations`` is aligned with ``sig.symbols``; each entry is a frozenset
    of arity-length tuples.  Tuples with repeated entries are admitted: every
    relation lives inside the full cartesian power of the domain.
    """

    sig: Signature
    size: int
    relations: tuple[frozenset[tuple[int, ...]], ...]

    def __post_init__(self):
        if self.size < 0:
            raise DomainError("size must be non-negative")
        if len(self.relations) != len(self.sig.symbols):
            raise DomainError("relation count must equal signature symbol count")
        for (name, arity), tuples in zip(self.sig.symbols, self.relations):
            for t in tuples:
                if len(t) != arity:
                    raise DomainError(f"tuple {t} has wrong arity for {name!r}")
                if any(not (0 <= x < self.size) for x in t):
                    raise DomainError(f"tuple {t} of {name!r} leaves the domain")

    @property
    def domain(self) -> range:
        return range(self.size)

    def relation(self, name: str) -> frozenset[tuple[int, ...]]:
        return self.relations[self.sig.index(name)]


def structure(
    size: int,
    relations: Mapping[str, Iterable[Sequence[int]]],
    sig: Signature | Iterable[tuple[str, int]] | None = None,
) -> Structure:
    """Convenience constructor.

    Without an explicit signature the symbols are taken from ``relations`` in
    name-sorted order, each with the arity of its first tuple (a symbol with
    no tuples needs an explicit signature).
    """
    if sig is None:
        pairs = []
        for name in sorted(relations):
            tuples = [tuple(t) for t in relations[name]]
            if not tuples:
                raise DomainError(
                    f"cannot infer arity of empty relation {name!r}; pass a signature"
                )
            pairs.append((name, len(tuples[0])))
        sig = Signature(tuple(pairs))
    elif not isinstance(sig, Signature):
        sig = signature(sig)
    rels = []
    for name, _ in sig.symbols:
        tuples = relations.get(name, ())
        rels.append(frozenset(tuple(int(x) for x in t) for t in tuples))
    if set(relations) - set(sig.names):
        raise DomainError(f"relations for unknown symbols: {set(relations) - set(sig.names)}")
    return Structure(sig, size, tuple(rels))


# ---------------------------------------------------------------------------
# Substructures and reducts


def induced_substructure(y: Structure, h: Iterable[int]) -> Structure:
    """Restrict ``y`` to the subset ``h``, relabeled order-preservingly onto
    {0, ..., |h|-1}.

    Raises DomainError for an empty subset or out-of-range elements.
    """
    hs = sorted(set(h))
    if not hs:
        raise DomainError("induced substructure of the empty set is not defined")
    if hs[0] < 0 or hs[-1] >= y.size:
        raise DomainError(f"subset {hs} leaves the domain of size {y.size}")
    relabel = {e: i for i, e in enumerate(hs)}
    keep = set(hs)
    rels = tuple(
        frozenset(tuple(relabel[x] for x in t) for t in tuples if set(t) <= keep)
        for tuples in y.relations
    )
    return Structure(y.sig, len(hs), rels)


def reduct(y: Structure, keep: Iterable[str]) -> Structure:
    """Drop every relation symbol not in ``keep``; signature order is
    preserved.  Unknown names raise DomainError."""
    keep_set = set(keep)
    unknown = keep_set - set(y.sig.names)
    if unknown:
        raise DomainError(f"unknown symbols in reduct: {sorted(unknown)}")
    pairs = tuple(p for p in y.sig.symbols if p[0] in keep_set)
    rels = tuple(
        y.relations[i] for i, p in enumerate(y.sig.symbols) if p[0] in keep_set
    )
    return Structure(Signature(pairs), y.size, rels)


# ---------------------------------------------------------------------------
# Companions


@dataclass(frozen=True, slots=True)
class Companion:
    """A linear order on {0, ..., size-1} with marked elements.

    ``order`` lists the domain in increasing companion order; ``constants``
    is the enumeration of marked elements.  Values built by
    ``companion_structure`` always place the constants as the initial segment
    of ``order``, in enumeration order; hand-built values may violate that,
    which ``validate_companion_axioms`` detects.
    """

    size: int
    order: tuple[int, ...]
    constants: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(self.size)):
            raise DomainError("order must be a permutation of the domain")
        if len(set(self.constants)) != len(self.constants):
            raise DomainError("constants must be distinct")
        if any(not (0 <= c < self.size) for c in self.constants):
            raise DomainError("constants must lie in the domain")

    def position(self, element: int) -> int:
        return _positions(self)[element]

    def precedes(self, a: int, b: int) -> bool:
        pos = _positions(self)
        return pos[a] < pos[b]

    @property
    def rest(self) -> tuple[int, ...]:
        """The unmarked elements, in companion order."""
        cs = set(self.constants)
        return tuple(e for e in self.order if e not in cs)


def _positions(x: Companion) -> dict[int, int]:
    # Companion is frozen, so the lookup table is cached per value.
    cached = _POSITION_CACHE.get(x)
    if cached is None:
        cached = {e: i for i, e in enumerate(x.order)}
        _POSITION_CACHE[x] = cached
    return cached


_POSITION_CACHE: dict[Companion, dict[int, int]] = {}


def companion_structure(
    m: int, f_enum: Sequence[int], rest_order: Sequence[int]
) -> Companion:
    """Build the companion whose order is ``f_enum`` followed by
    ``rest_order`` and whose constants are ``f_enum``.

    The two parts must partition {0, ..., m-1}; overlap or coverage failure
    raises DomainError.
    """
    f_enum = tuple(int(x) for x in f_enum)
    rest_order = tuple(int(x) for x in rest_order)
    if len(set(f_enum)) != len(f_enum):
        raise DomainError("f_enum contains repeats")
    if set(f_enum) & set(rest_order):
        raise DomainError("f_enum and rest_order overlap")
    order = f_enum + rest_order
    if sorted(order) != list(range(m)):
        raise DomainError("f_enum and rest_order must cover the domain exactly")
    return Companion(m, order, f_enum)


def validate_companion_axioms(x: Companion) -> tuple[bool, bool, bool, bool]:
    """Check the four companion axioms.

    Returns (order is linear, constants are distinct singletons, constants
    ordered as their indices, constants form an initial segment).  The first
    two hold by representation for any well-formed Companion; the last two
    can fail for hand-built values.
    """
    is_linear = sorted(x.order) == list(range(x.size))
    distinct = len(set(x.constants)) == len(x.constants) and all(
        0 <= c < x.size for c in x.constants
    )
    pos = {e: i for i, e in enumerate(x.order)}
    ordered = all(
        pos[x.constants[k]] < pos[x.constants[l]]
        for k in range(len(x.constants))
        for l in range(k + 1, len(x.constants))
    )
    initial = set(x.order[: len(x.constants)]) == set(x.constants)
    return (is_linear, distinct, ordered, initial)


def companion_as_structure(x: Companion) -> Structure:
    """The companion, viewed as a relational structure over the reserved
    language: binary "R" (strict order) plus one unary "U<j>" per constant."""
    pairs = [("R", 2)] + [(f"U{j}", 1) for j in range(len(x.constants))]
    pos = {e: i for i, e in enumerate(x.order)}
    rels: dict[str, set] = {
        "R": {(a, b) for a in x.order for b in x.order if pos[a] < pos[b]}
    }
    for j, c in enumerate(x.constants):
        rels[f"U{j}"] = {(c,)}
    return structure(x.size, rels, pairs)


# ---------------------------------------------------------------------------
# JSON text formats (shared with the CLI)


def structure_to_dict(y: Structure) -> dict:
    return {
        "signature": [{"name": n, "arity": a} for n, a in y.sig.symbols],
        "size": y.size,
        "relations": {
            name: sorted([list(t) for t in y.relations[i]])
            for i, (name, _) in enumerate(y.sig.symbols)
        },
    }


def structure_from_dict(doc: dict) -> Structure:
    try:
        sig = signature((s["name"], s["arity"]) for s in doc["signature"])
        size = int(doc["size"])
        relations = {
            name: [tuple(int(x) for x in t) for t in tuples]
            for name, tuples in doc.get("relations", {}).items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed structure document: {exc}") from exc
    return structure(size, relations, sig)


def companion_to_dict(x: Companion) -> dict:
    return {"size": x.size, "order": list(x.order), "constants": list(x.constants)}


def companion_from_dict(doc: dict) -> Companion:
    try:
        return Companion(
            int(doc["size"]),
            tuple(int(x) for x in doc["order"]),
            tuple(int(x) for x in doc.get("constants", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed companion document: {exc}") from exc


def load_structure(path: str) -> Structure:
    return structure_from_dict(_load_json(path))


def load_companion(path: str) -> Companion:
    return companion_from_dict(_load_json(path))


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top-level JSON value must be an object")
    return doc
