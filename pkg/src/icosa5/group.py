"""Finite permutation groups given by named generators.

Words are tuples of generator names and evaluate left to right. The group
is enumerated breadth-first over its Cayley graph (right multiplication by
each generator, in generator order), which yields for every element the
shortest word, lexicographically least among the shortest.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .perm import CycleType, Domain, Permutation

__all__ = [
    "ClosureError",
    "GeneratorSet",
    "Group",
    "RelationReport",
    "RelationResult",
    "Word",
    "WordParseError",
    "evaluate_word",
    "format_word",
    "generate",
    "parse_word",
    "partition_by_cycle_type",
    "shortest_word",
    "verify_relations",
]

Word = tuple[str, ...]

DEFAULT_BOUND = 10_000


class ClosureError(RuntimeError):
    pass


class WordParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"column {position + 1}: {message}\n  {text}\n  {' ' * position}^")


class GeneratorSet(Mapping[str, Permutation]):
    """Ordered, named generators sharing one domain."""

    def __init__(self, generators: Iterable[tuple[str, Permutation]] | Mapping[str, Permutation]):
        items = list(generators.items() if isinstance(generators, Mapping) else generators)
        if not items:
            raise ValueError("a generator set needs at least one generator")
        self._gens: dict[str, Permutation] = {}
        for name, perm in items:
            if name in self._gens:
                raise ValueError(f"duplicate generator name {name!r}")
            if perm.domain != items[0][1].domain:
                raise ValueError(f"generator {name!r} acts on a different domain")
            self._gens[name] = perm

    @property
    def domain(self) -> Domain:
        return next(iter(self._gens.values())).domain

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._gens)

    def __getitem__(self, name: str) -> Permutation:
        return self._gens[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._gens)

    def __len__(self) -> int:
        return len(self._gens)

    def __repr__(self) -> str:
        return "GeneratorSet(" + ", ".join(f"{k}={v}" for k, v in self._gens.items()) + ")"


def format_word(word: Sequence[str]) -> str:
    """Concatenated names; ``-`` for the empty word."""
    return "".join(word) or "-"


def parse_word(text: str, names: Iterable[str]) -> Word:
    """Tokenize a word such as ``DYDT``, ``YA^2YV``, ``X2D`` or ``(DT)^2``.

    Names are matched longest first. A trailing integer (optionally after
    ``^``) repeats the preceding name or parenthesised group. ``-``, ``I``
    (unless it names a generator) and the empty string denote the empty word.
    """
    names = sorted(set(names), key=len, reverse=True)
    stripped = text.replace(" ", "")
    if stripped in ("", "-") or (stripped == "I" and "I" not in names):
        return ()
    pos = 0

    def exponent() -> int:
        nonlocal pos
        start = pos
        if pos < len(stripped) and stripped[pos] == "^":
            pos += 1
        digits = pos
        while pos < len(stripped) and stripped[pos].isdigit():
            pos += 1
        if pos == digits:
            if digits != start:
                raise WordParseError("expected an exponent after '^'", stripped, pos)
            return 1
        return int(stripped[digits:pos])

    def sequence(depth: int) -> list[str]:
        nonlocal pos
        out: list[str] = []
        while pos < len(stripped):
            ch = stripped[pos]
            if ch == ")":
                if depth == 0:
                    raise WordParseError("unbalanced ')'", stripped, pos)
                return out
            if ch == "(":
                open_at = pos
                pos += 1
                inner = sequence(depth + 1)
                if pos >= len(stripped):
                    raise WordParseError("unclosed '('", stripped, open_at)
                pos += 1
                out.extend(inner * exponent())
                continue
            for name in names:
                if stripped.startswith(name, pos):
                    pos += len(name)
                    out.extend([name] * exponent())
                    break
            else:
                raise WordParseError(f"unknown generator at {stripped[pos:]!r}", stripped, pos)
        return out

    return tuple(sequence(0))


def evaluate_word(gens: Mapping[str, Permutation], word: Sequence[str], domain: Domain | None = None) -> Permutation:
    """Left-to-right product of the named generators."""
    if domain is None:
        domain = next(iter(gens.values())).domain
    result = Permutation.identity(domain)
    for name in word:
        try:
            result = result * gens[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None
    return result


class Group:
    """Elements in breadth-first order together with their shortest words."""

    def __init__(self, generators: GeneratorSet, words: dict[Permutation, Word]):
        self.generators = generators
        self._words = words
        self.elements: tuple[Permutation, ...] = tuple(words)

    @property
    def domain(self) -> Domain:
        return self.generators.domain

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._words

    def word(self, target: Permutation) -> Word:
        try:
            return self._words[target]
        except KeyError:
            raise ValueError(f"{target!r} is not in the group") from None

    def diameter(self) -> int:
        """Largest shortest-word length (the Cayley graph's radius from the identity)."""
        return max(len(w) for w in self._words.values())

    def __repr__(self) -> str:
        return f"Group(order={len(self)}, generators={list(self.generators.names)})"


def generate(gens: GeneratorSet, bound: int = DEFAULT_BOUND) -> Group:
    """Breadth-first closure of ``gens``; raises ClosureError past ``bound`` elements."""
    ident = Permutation.identity(gens.domain)
    words: dict[Permutation, Word] = {ident: ()}
    queue = deque([ident])
    items = list(gens.items())
    while queue:
        g = queue.popleft()
        w = words[g]
        for name, s in items:
            h = g * s
            if h not in words:
                words[h] = w + (name,)
                if len(words) > bound:
                    raise ClosureError(f"closure exceeds {bound} elements; check the generators")
                queue.append(h)
    return Group(gens, words)


def shortest_word(group: Group, target: Permutation) -> Word:
    return group.word(target)


@dataclass(frozen=True)
class RelationResult:
    lhs: Word
    rhs: Word
    passed: bool

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}: {'pass' if self.passed else 'FAIL'}"


@dataclass(frozen=True)
class RelationReport:
    results: tuple[RelationResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def verify_relations(gens: GeneratorSet, relations: Iterable[tuple[Sequence[str], Sequence[str]]]) -> RelationReport:
    out = []
    for lhs, rhs in relations:
        ok = evaluate_word(gens, lhs, gens.domain) == evaluate_word(gens, rhs, gens.domain)
        out.append(RelationResult(tuple(lhs), tuple(rhs), ok))
    return RelationReport(tuple(out))


def partition_by_cycle_type(group: Iterable[Permutation]) -> dict[CycleType, tuple[Permutation, ...]]:
    """Classes keyed by cycle type, in order of first appearance."""
    parts: dict[CycleType, list[Permutation]] = {}
    for g in group:
        parts.setdefault(g.cycle_type(), []).append(g)
    return {k: tuple(v) for k, v in parts.items()}
