"""Permutations of finite labelled domains, with cycle-notation I/O.

Composition is left to right everywhere in this package: ``p * q`` (and
``compose(p, q)``) applies ``p`` first, then ``q``, so
``(p * q)(x) == q(p(x))``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "CycleParseError",
    "CycleType",
    "Domain",
    "DomainMismatchError",
    "Permutation",
    "compose",
    "format_cycles",
    "identity",
    "parse_cycles",
]

_FORBIDDEN = set("(),") | {" ", "\t", "\n", "\r"}


class DomainMismatchError(ValueError):
    pass


class CycleParseError(ValueError):
    """Malformed cycle notation, or a label the domain does not accept.

    ``position`` is the 0-based column of the offending token in ``text``.
    """

    def __init__(self, message: str, text: str, position: int, token: str | None = None):
        self.message = message
        self.text = text
        self.position = position
        self.token = token
        super().__init__(self._format())

    def _format(self) -> str:
        where = f"column {self.position + 1}"
        head = f"{where}: {self.message}"
        return f"{head}\n  {self.text}\n  {' ' * self.position}^"


class Domain:
    """An ordered set of labels. The order fixes canonical output order."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise ValueError(f"invalid label {label!r}")
            if _FORBIDDEN & set(label):
                raise ValueError(f"label {label!r} contains whitespace, comma or parenthesis")
            if label in index:
                raise ValueError(f"duplicate label {label!r}")
            index[label] = i
        self.labels = labels
        self._index = index

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Domain):
            return NotImplemented
        return self is other or self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return "Domain({" + ", ".join(self.labels) + "})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in {self!r}") from None


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths, fixed points included.

    Stored as sorted ``(length, multiplicity)`` pairs; prints in the
    ``k1=2,k3=1`` style.
    """

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> CycleType:
        return cls(tuple(sorted(Counter(lengths).items())))

    @classmethod
    def of(cls, **ks: int) -> CycleType:
        """``CycleType.of(k1=2, k3=1)``"""
        return cls(tuple(sorted((int(k[1:]), m) for k, m in ks.items() if m)))

    def __getitem__(self, length: int) -> int:
        return dict(self.counts).get(length, 0)

    @property
    def size(self) -> int:
        return sum(length * m for length, m in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __str__(self) -> str:
        return ",".join(f"k{length}={m}" for length, m in self.counts)


class Permutation:
    """A bijection of a :class:`Domain` onto itself. Immutable and hashable."""

    __slots__ = ("domain", "images", "_hash")

    def __init__(self, domain: Domain, images: Sequence[int]):
        images = tuple(images)
        if len(images) != len(domain) or sorted(images) != list(range(len(domain))):
            raise ValueError("images do not form a bijection of the domain")
        self.domain = domain
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, domain: Domain) -> Permutation:
        return cls(domain, range(len(domain)))

    @classmethod
    def from_mapping(cls, domain: Domain, mapping: Mapping[str, str]) -> Permutation:
        """Build from a label mapping; labels absent from ``mapping`` are fixed."""
        images = list(range(len(domain)))
        for src, dst in mapping.items():
            images[domain.index(src)] = domain.index(dst)
        return cls(domain, images)

    @classmethod
    def from_images(cls, domain: Domain, images: Sequence[str]) -> Permutation:
        """Build from the image of every label, listed in domain order."""
        if len(images) != len(domain):
            raise ValueError(f"expected {len(domain)} images, got {len(images)}")
        return cls(domain, [domain.index(label) for label in images])

    @classmethod
    def from_cycles(cls, domain: Domain, cycles: Iterable[Sequence[str]]) -> Permutation:
        """Product of disjoint cycles given as label sequences."""
        images = list(range(len(domain)))
        seen: set[str] = set()
        for cycle in cycles:
            for label in cycle:
                if label in seen:
                    raise ValueError(f"label {label!r} appears twice")
                seen.add(label)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[domain.index(a)] = domain.index(b)
        return cls(domain, images)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images and self.domain == other.domain

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self) or '()'})"

    def __str__(self) -> str:
        return format_cycles(self)

    def __call__(self, label: str) -> str:
        return self.domain.labels[self.images[self.domain.index(label)]]

    def image_labels(self) -> tuple[str, ...]:
        """Images of all labels in domain order (one Table 1 style row)."""
        labels = self.domain.labels
        return tuple(labels[i] for i in self.images)

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.domain != other.domain:
            raise DomainMismatchError(f"cannot compose over {self.domain!r} and {other.domain!r}")
        q = other.images
        return Permutation(self.domain, [q[i] for i in self.images])

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(self.domain, inv)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Permutation.identity(self.domain)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    # -- structure -----------------------------------------------------------

    def _index_cycles(self) -> list[list[int]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(cycle)
        return out

    def cycles(self, include_trivial: bool = False) -> list[tuple[str, ...]]:
        """Canonical cycle decomposition.

        Each cycle starts at its domain-minimal label and cycles are sorted by
        that label's domain position. Fixed points are omitted unless
        ``include_trivial`` is set.
        """
        labels = self.domain.labels
        # scanning starts in domain order, so each cycle already begins at its minimum
        return [
            tuple(labels[i] for i in c)
            for c in self._index_cycles()
            if include_trivial or len(c) > 1
        ]

    def cycle_type(self) -> CycleType:
        return CycleType.from_lengths(len(c) for c in self._index_cycles())

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self._index_cycles())) if self.images else 1

    def parity(self) -> str:
        """``"even"`` or ``"odd"``."""
        return "even" if (len(self.images) - len(self._index_cycles())) % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.parity() == "even"

    def fixed_points(self) -> tuple[str, ...]:
        labels = self.domain.labels
        return tuple(labels[i] for i, j in enumerate(self.images) if i == j)


def identity(domain: Domain) -> Permutation:
    return Permutation.identity(domain)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` first, then ``q``."""
    return p * q


def format_cycles(p: Permutation, include_trivial: bool = False) -> str:
    """Canonical cycle notation; the identity formats as ``""``."""
    return "".join("(" + ",".join(c) + ")" for c in p.cycles(include_trivial))


def _tokenize(text: str) -> Iterator[tuple[str, str, int]]:
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
        elif ch in "(),":
            yield ch, ch, i
            i += 1
        else:
            j = i
            while j < n and text[j] not in "(), \t":
                j += 1
            yield "label", text[i:j], i
            i = j
    yield "end", "", n


def parse_cycles(text: str, domain: Domain) -> Permutation:
    """Parse ``(a,b,...)(c,d,...)`` notation into a permutation of ``domain``.

    Cycles must be disjoint; labels not mentioned are fixed. One-element
    cycles such as ``(3)`` are accepted and mean nothing, so rows written with
    explicit fixed points like ``(4,1)(5,2)(3)`` parse verbatim.
    """
    tokens = list(_tokenize(text))
    pos = 0
    seen: dict[str, int] = {}
    cycles: list[list[str]] = []

    def expect(kind: str, what: str) -> tuple[str, str, int]:
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise CycleParseError(f"expected {what}, found {found}", text, tok[2], tok[1] or None)
        pos += 1
        return tok

    def label() -> str:
        _, value, col = expect("label", "a label")
        if value not in domain:
            raise CycleParseError(f"unknown label {value!r}", text, col, value)
        if value in seen:
            raise CycleParseError(
                f"label {value!r} appears twice (first at column {seen[value] + 1})",
                text, col, value,
            )
        seen[value] = col
        return value

    while tokens[pos][0] != "end":
        expect("(", "'('")
        cycle = [label()]
        while tokens[pos][0] == ",":
            pos += 1
            cycle.append(label())
        expect(")", "',' or ')'")
        cycles.append(cycle)
    return Permutation.from_cycles(domain, cycles)
