"""The isomorphism between the icosahedral rotation group and A5.

The map is fixed on generators (D, Y, T to the 3-cycles (1,4,5), (2,4,5),
(3,4,5)) and extended along shortest words. Well-definedness is not argued,
it is checked: :func:`verify_isomorphism` tests multiplicativity on every
ordered pair of elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping

from . import fixtures
from .group import GeneratorSet, Group, evaluate_word, format_word, generate
from .icosa import IcosaGraph, RotationClass, classify_rotation
from .perm import CycleType, Domain, Permutation, format_cycles, parse_cycles

__all__ = [
    "A5_DOMAIN",
    "CLASS_CORRESPONDENCE",
    "Correspondence",
    "CorrespondenceRow",
    "Homomorphism",
    "IsomorphismReport",
    "a5_generators",
    "build_a5",
    "double_transposition_identity",
    "extend_hom",
    "full_correspondence",
    "verify_isomorphism",
]

A5_DOMAIN = Domain(fixtures.A5_LABELS)

A5_GENERATOR_CYCLES = {"D": "(1,4,5)", "Y": "(2,4,5)", "T": "(3,4,5)"}

CLASS_CORRESPONDENCE = {
    "identity": CycleType.of(k1=5),
    "face": CycleType.of(k1=2, k3=1),
    "edge": CycleType.of(k1=1, k2=2),
    "vertex": CycleType.of(k5=1),
}


def a5_generators() -> GeneratorSet:
    return GeneratorSet((name, parse_cycles(text, A5_DOMAIN)) for name, text in A5_GENERATOR_CYCLES.items())


def build_a5() -> Group:
    return generate(a5_generators())


class Homomorphism:
    """Candidate map ``source -> target`` determined by generator images.

    Every source element is sent to the evaluation of its shortest word on
    the generator images. Nothing guarantees this is a homomorphism until
    :func:`verify_isomorphism` says so.
    """

    def __init__(self, source: Group, target: Group, generator_images: Mapping[str, Permutation]):
        missing = set(source.generators.names) - set(generator_images)
        if missing:
            raise ValueError(f"no image given for generators {sorted(missing)}")
        self.source = source
        self.target = target
        self.generator_images = dict(generator_images)
        self.element_map: dict[Permutation, Permutation] = {
            g: evaluate_word(self.generator_images, source.word(g), target.domain) for g in source
        }
        self._preimage: dict[Permutation, Permutation] | None = None

    def __call__(self, g: Permutation) -> Permutation:
        try:
            return self.element_map[g]
        except KeyError:
            raise ValueError(f"{g!r} is not in the source group") from None

    def preimage(self, a: Permutation) -> Permutation:
        """Inverse lookup; only defined when the map is injective."""
        if self._preimage is None:
            inv = {b: g for g, b in self.element_map.items()}
            if len(inv) != len(self.element_map):
                raise ValueError("map is not injective; no inverse")
            self._preimage = inv
        try:
            return self._preimage[a]
        except KeyError:
            raise ValueError(f"{a!r} is not in the image") from None


def extend_hom(source: Group, images: Mapping[str, Permutation], target: Group | None = None) -> Homomorphism:
    if target is None:
        target = build_a5()
    return Homomorphism(source, target, images)


@dataclass(frozen=True)
class IsomorphismReport:
    pairs_checked: int
    multiplicative_failures: int
    first_failure: tuple[Permutation, Permutation] | None
    injective: bool
    surjective: bool

    @property
    def multiplicative(self) -> bool:
        return self.multiplicative_failures == 0

    @property
    def passed(self) -> bool:
        return self.multiplicative and self.injective and self.surjective


def verify_isomorphism(h: Homomorphism) -> IsomorphismReport:
    elements = h.source.elements
    image = h.element_map
    failures = 0
    first = None
    for g in elements:
        hg = image[g]
        for k in elements:
            if image[g * k] != hg * image[k]:
                failures += 1
                if first is None:
                    first = (g, k)
    values = set(image.values())
    return IsomorphismReport(
        pairs_checked=len(elements) ** 2,
        multiplicative_failures=failures,
        first_failure=first,
        injective=len(values) == len(elements),
        surjective=values == set(h.target.elements),
    )


@dataclass(frozen=True)
class CorrespondenceRow:
    rotation: Permutation
    word: tuple[str, ...]
    rotation_class: RotationClass
    image: Permutation

    @property
    def image_class(self) -> CycleType:
        return self.image.cycle_type()

    def to_dict(self) -> dict:
        return {
            "word": format_word(self.word),
            "rotation_cycles": format_cycles(self.rotation),
            "class": self.rotation_class.kind,
            "axis": [list(part) for part in self.rotation_class.axis],
            "a5_cycles": format_cycles(self.image),
            "a5_class": str(self.image_class),
        }


@dataclass(frozen=True)
class Correspondence:
    rows: tuple[CorrespondenceRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def to_list(self) -> list[dict]:
        return [row.to_dict() for row in self.rows]

    def to_text(self) -> str:
        fields = ("word", "rotation_cycles", "class", "axis", "a5_cycles", "a5_class")
        table = [list(fields)]
        for row in self.rows:
            d = row.to_dict()
            d["axis"] = row.rotation_class.axis_text()
            table.append([d[f] or "-" for f in fields])
        widths = [max(len(r[i]) for r in table) for i in range(len(fields))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table)


_KIND_ORDER = {"identity": 0, "face": 1, "edge": 2, "vertex": 3}


def full_correspondence(h: Homomorphism, g: IcosaGraph) -> Correspondence:
    """All rows, identity first, then face, edge and vertex rotations by axis and turns."""
    rows = [CorrespondenceRow(r, h.source.word(r), classify_rotation(r, g), h(r)) for r in h.source]
    rows.sort(
        key=lambda row: (
            _KIND_ORDER[row.rotation_class.kind],
            [g.key(part) for part in row.rotation_class.axis],
            row.rotation_class.turns,
        )
    )
    return Correspondence(tuple(rows))


@dataclass(frozen=True)
class DoubleTranspositionCheck:
    points: tuple[str, str, str, str]
    product: Permutation
    expected: Permutation

    @property
    def passed(self) -> bool:
        return self.product == self.expected


def double_transposition_identity(a: str, b: str, c: str, d: str, domain: Domain = A5_DOMAIN) -> DoubleTranspositionCheck:
    """Check (a,b,c)(a,b,d) == (a,d)(b,c) with left-to-right composition."""
    if len({a, b, c, d}) != 4:
        raise ValueError(f"points must be distinct, got {(a, b, c, d)}")
    product = Permutation.from_cycles(domain, [(a, b, c)]) * Permutation.from_cycles(domain, [(a, b, d)])
    expected = Permutation.from_cycles(domain, [(a, d), (b, c)])
    return DoubleTranspositionCheck((a, b, c, d), product, expected)


def all_double_transposition_checks(domain: Domain = A5_DOMAIN) -> list[DoubleTranspositionCheck]:
    return [double_transposition_identity(*pts, domain=domain) for pts in permutations(domain.labels, 4)]
