"""Combinatorial icosahedron recovered from the rotation group.

Nothing here is typed in from a drawing: the faces are the orbit of one seed
triangle under the group generated by the three face rotations D, Y, T, the
edges are the sides of those faces, and the antipodal pairing is read off
the fixed points of the order-5 elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import fixtures
from .group import GeneratorSet, Group, generate
from .perm import Domain, Permutation

__all__ = [
    "ICO_DOMAIN",
    "ClassificationError",
    "IcosaGraph",
    "RotationClass",
    "SharedVertexConfig",
    "SharedVertexResult",
    "StructureError",
    "build_graph",
    "classify_rotation",
    "icosahedral_generators",
    "is_automorphism",
    "neighbor_pentagon",
    "shared_vertex_compose",
]

ICO_DOMAIN = Domain(fixtures.ICO_LABELS)

Edge = frozenset  # of two labels
Face = frozenset  # of three labels


class StructureError(RuntimeError):
    pass


class ClassificationError(ValueError):
    pass


def icosahedral_generators() -> GeneratorSet:
    """D, Y, T as given by their Table 1 rows."""
    rows = {row.name: row for row in fixtures.TABLE_1}
    return GeneratorSet(
        (name, Permutation.from_images(ICO_DOMAIN, rows[name].images)) for name in fixtures.GENERATOR_NAMES
    )


@dataclass(frozen=True, eq=False)
class IcosaGraph:
    domain: Domain
    edges: frozenset
    faces: frozenset
    antipode: dict[str, str]
    rotations: Group
    _neighbors: dict[str, frozenset] = field(repr=False)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.domain.labels

    def key(self, labels: Iterable[str]) -> tuple[int, ...]:
        """Sort key for a vertex set: sorted domain positions."""
        return tuple(sorted(self.domain.index(v) for v in labels))

    def ordered(self, labels: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(labels, key=self.domain.index))

    def neighbors(self, x: str) -> frozenset:
        try:
            return self._neighbors[x]
        except KeyError:
            raise KeyError(f"{x!r} is not a vertex") from None

    def is_edge(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges

    def antipode_permutation(self) -> Permutation:
        return Permutation.from_mapping(self.domain, self.antipode)

    def sorted_edges(self) -> list[tuple[str, ...]]:
        return sorted((self.ordered(e) for e in self.edges), key=self.key)

    def sorted_faces(self) -> list[tuple[str, ...]]:
        return sorted((self.ordered(f) for f in self.faces), key=self.key)

    def antipodal_pairs(self) -> list[tuple[str, str]]:
        pairs = {self.ordered((a, b)) for a, b in self.antipode.items()}
        return sorted(pairs, key=self.key)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.sorted_edges()],
            "faces": [list(f) for f in self.sorted_faces()],
            "antipodal_pairs": [list(p) for p in self.antipodal_pairs()],
        }


def build_graph(generators: GeneratorSet | None = None, seed_face: Sequence[str] = fixtures.SEED_FACE) -> IcosaGraph:
    if generators is None:
        generators = icosahedral_generators()
    if len(set(seed_face)) != 3:
        raise StructureError(f"seed face needs 3 distinct vertices, got {tuple(seed_face)}")
    group = generate(generators)
    domain = generators.domain
    seed = frozenset(seed_face)
    faces = frozenset(frozenset(g(v) for v in seed) for g in group)
    edges = frozenset(frozenset(e) for f in faces for e in combinations(f, 2))
    covered = set().union(*faces)
    if (len(faces), len(edges), len(covered)) != (20, 30, 12):
        raise StructureError(
            f"orbit of {tuple(seed_face)} gives {len(faces)} faces, {len(edges)} edges, "
            f"{len(covered)} vertices; expected 20, 30, 12"
        )
    neighbors = {v: frozenset(u for e in edges if v in e for u in e if u != v) for v in domain}
    if any(len(n) != 5 for n in neighbors.values()):
        raise StructureError("derived graph is not 5-regular")
    for e in edges:
        if sum(e <= f for f in faces) != 2:
            raise StructureError(f"edge {sorted(e)} does not lie in exactly two faces")

    antipode: dict[str, str] = {}
    for g in group:
        if g.order() != 5:
            continue
        a, b = g.fixed_points()
        for x, y in ((a, b), (b, a)):
            if antipode.setdefault(x, y) != y:
                raise StructureError(f"vertex {x!r} fixed together with both {antipode[x]!r} and {y!r}")
    if set(antipode) != set(domain):
        raise StructureError(f"order-5 fixed pairs cover {len(antipode)} vertices, expected 12")
    opp = Permutation.from_mapping(domain, antipode)
    if any(frozenset(opp(v) for v in e) not in edges for e in edges):
        raise StructureError("antipodal map does not preserve edges")
    if any(frozenset(opp(v) for v in f) not in faces for f in faces):
        raise StructureError("antipodal map does not preserve faces")
    return IcosaGraph(domain, edges, faces, antipode, group, neighbors)


def is_automorphism(p: Permutation, g: IcosaGraph) -> bool:
    return all(frozenset(p(v) for v in e) in g.edges for e in g.edges)


def neighbor_pentagon(x: str, g: IcosaGraph) -> tuple[str, ...]:
    """Neighbours of ``x`` in cyclic adjacency order.

    Starts at the domain-minimal neighbour and steps toward the smaller of
    its two pentagon neighbours.
    """
    ring = g.neighbors(x)
    start = min(ring, key=g.domain.index)
    order = [start]
    prev = None
    cur = start
    for _ in range(4):
        nxt = [u for u in g.neighbors(cur) & ring if u != prev and u not in order]
        if len(order) == 1:
            nxt = [min(nxt, key=g.domain.index)]
        if len(nxt) != 1:
            raise StructureError(f"link of {x!r} is not a pentagon")
        prev, cur = cur, nxt[0]
        order.append(cur)
    if not g.is_edge(order[-1], order[0]):
        raise StructureError(f"link of {x!r} is not a pentagon")
    return tuple(order)


@dataclass(frozen=True)
class RotationClass:
    """Geometric type of a rotation.

    ``axis`` holds two antipodal vertex sets (faces, edges or single
    vertices), each in domain order, smaller one first. ``turns`` counts
    elementary turns against a fixed combinatorial orientation: for a face
    rotation 1 if the first axis face's first vertex goes to its second
    vertex, else 2; for a vertex rotation ``k`` where the first pentagon
    vertex of the first axis vertex goes ``k`` steps along
    :func:`neighbor_pentagon`. Edge rotations have 1, the identity 0.
    """

    kind: str
    axis: tuple[tuple[str, ...], ...]
    turns: int

    @property
    def order(self) -> int:
        return {"identity": 1, "face": 3, "edge": 2, "vertex": 5}[self.kind]

    def axis_text(self) -> str:
        return " ".join("{" + ",".join(part) + "}" for part in self.axis)


def _axis(parts: Iterable[Iterable[str]], g: IcosaGraph) -> tuple[tuple[str, ...], ...]:
    ordered = sorted((g.ordered(p) for p in parts), key=g.key)
    if len(ordered) != 2:
        raise ClassificationError(f"expected two axis components, found {len(ordered)}")
    first, second = ordered
    if frozenset(g.antipode[v] for v in first) != frozenset(second):
        raise ClassificationError(f"axis components {first} and {second} are not antipodal")
    return tuple(ordered)


def classify_rotation(p: Permutation, g: IcosaGraph) -> RotationClass:
    if p not in g.rotations:
        raise ClassificationError(f"{p!r} is not one of the {len(g.rotations)} rotations")
    n = p.order()
    if n == 1:
        return RotationClass("identity", (), 0)
    cycles = [frozenset(c) for c in p.cycles()]
    if n == 3:
        axis = _axis((c for c in cycles if c in g.faces), g)
        a, b, _ = axis[0]
        return RotationClass("face", axis, 1 if p(a) == b else 2)
    if n == 2:
        return RotationClass("edge", _axis((c for c in cycles if c in g.edges), g), 1)
    if n == 5:
        axis = _axis(([v] for v in p.fixed_points()), g)
        ring = neighbor_pentagon(axis[0][0], g)
        return RotationClass("vertex", axis, ring.index(p(ring[0])))
    raise ClassificationError(f"rotation of order {n} has no geometric class")


@dataclass(frozen=True)
class SharedVertexConfig:
    """Two faces {x,y,z} and {x,u,v} meeting at x; a is x's fifth neighbour."""

    x: str
    y: str
    z: str
    u: str
    v: str
    a: str


@dataclass(frozen=True)
class SharedVertexResult:
    case: str  # "case1", "case2" or "not_edge_rotation"
    config: SharedVertexConfig
    axis_edge: tuple[str, str] | None
    product: Permutation
    product_class: RotationClass


def shared_vertex_compose(r1: Permutation, r2: Permutation, g: IcosaGraph) -> SharedVertexResult:
    """Predict the type of ``r1 * r2`` from how the two rotated faces meet.

    ``r1`` sends x->y->z on one axis face and ``r2`` sends x->u->v on an
    axis face of its own that shares only x with the first. If {u,z} is an
    edge the product turns about {u,z}; if instead {v,y} is an edge it
    turns about {x,a}; otherwise the two rotations push the pentagon in
    opposite senses and the product is not an edge rotation. The prediction
    is checked against :func:`classify_rotation`.
    """
    c1 = classify_rotation(r1, g)
    c2 = classify_rotation(r2, g)
    if c1.kind != "face" or c2.kind != "face":
        raise ClassificationError(f"expected two face rotations, got {c1.kind} and {c2.kind}")
    contacts = [
        (frozenset(f1), frozenset(f2))
        for f1 in c1.axis
        for f2 in c2.axis
        if len(set(f1) & set(f2)) == 1
    ]
    if not contacts:
        shared = max(len(set(f1) & set(f2)) for f1 in c1.axis for f2 in c2.axis)
        raise ClassificationError(f"axis faces share {shared} vertices, not exactly one")
    # contacts come in antipodal couples; take the one at the smaller vertex
    f1, f2 = min(contacts, key=lambda c: g.domain.index(next(iter(c[0] & c[1]))))
    (x,) = f1 & f2
    y = r1(x)
    z = r1(y)
    u = r2(x)
    v = r2(u)
    (a,) = g.neighbors(x) - {y, z, u, v}
    config = SharedVertexConfig(x, y, z, u, v, a)

    product = r1 * r2
    pc = classify_rotation(product, g)
    if g.is_edge(u, z):
        case, axis_edge = "case1", g.ordered((u, z))
    elif g.is_edge(v, y):
        case, axis_edge = "case2", g.ordered((x, a))
    else:
        case, axis_edge = "not_edge_rotation", None

    if axis_edge is None:
        consistent = pc.kind != "edge"
    else:
        consistent = pc.kind == "edge" and axis_edge in pc.axis
    if not consistent:
        raise AssertionError(f"{case} predicted for {config} but the product is {pc}")
    return SharedVertexResult(case, config, axis_edge, product, pc)
