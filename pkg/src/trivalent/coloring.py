"""Face colorings of trivalent maps and the rank classifier.

Around every vertex of a validated trivalent map lie three distinct faces.  A
Z3-coloring gives the faces colors from {1,2,3} with all three present at
every vertex; a Z2-coloring gives bits whose sum at every vertex is 0, i.e. a
left-nullspace vector of the incidence matrix.  Moving a proper color triple
across an edge keeps the two faces flanking the edge and hands the remaining
color to the far vertex's third face.  Walking triples around closed circuits
yields color permutations; whether they all fix the color planted on a chosen
odd face decides the middle case of the rank classification.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .gf2 import BitVector, left_nullspace_basis
from .planar_map import PlanarMap
from .region_calculus import ClassCount

__all__ = [
    "ThetaGraphError",
    "S3Element",
    "subgroup_closure",
    "Z2Coloring",
    "Z3Coloring",
    "z2_coloring_space",
    "z3_coloring",
    "z3_to_z2",
    "base_triple",
    "transport",
    "MonodromyReport",
    "monodromy",
    "Classification",
    "classify",
    "rank_prediction",
]


class ThetaGraphError(ValueError):
    """The 2-vertex map has more faces than vertices and is excluded."""


# --- color permutations -----------------------------------------------------


@dataclass(frozen=True)
class S3Element:
    """A permutation of the colors {1,2,3}, stored as the image tuple."""

    images: tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"{self.images} is not a permutation of 1..3")

    @classmethod
    def identity(cls) -> "S3Element":
        return cls((1, 2, 3))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "S3Element":
        return cls((mapping[1], mapping[2], mapping[3]))

    def __call__(self, color: int) -> int:
        return self.images[color - 1]

    def compose(self, other: "S3Element") -> "S3Element":
        """self after other."""
        return S3Element(tuple(self(other(c)) for c in (1, 2, 3)))

    def inverse(self) -> "S3Element":
        inv = [0, 0, 0]
        for c in (1, 2, 3):
            inv[self(c) - 1] = c
        return S3Element(tuple(inv))

    def fixes(self, color: int) -> bool:
        return self(color) == color

    @property
    def is_identity(self) -> bool:
        return self.images == (1, 2, 3)

    def cycle_notation(self) -> str:
        seen = set()
        parts = []
        for start in (1, 2, 3):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            c = self(start)
            while c != start:
                cyc.append(c)
                seen.add(c)
                c = self(c)
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "e"


def subgroup_closure(generators) -> frozenset[S3Element]:
    """Smallest subgroup of S3 containing the generators."""
    group = {S3Element.identity()}
    frontier = list(group)
    gens = list(generators)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                prod = h.compose(g)
                if prod not in group:
                    group.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return frozenset(group)


# --- colorings ---------------------------------------------------------------


@dataclass(frozen=True)
class Z2Coloring:
    """Face bits summing to 0 mod 2 around every vertex."""

    colors: tuple[int, ...]

    def as_vector(self) -> BitVector:
        return BitVector.from_bits(self.colors)

    @property
    def is_trivial(self) -> bool:
        return not any(self.colors)


@dataclass(frozen=True)
class Z3Coloring:
    """Face colors from {1,2,3}, all distinct around every vertex."""

    colors: tuple[int, ...]


def z2_coloring_space(pmap: PlanarMap) -> tuple[tuple[Z2Coloring, ...], int]:
    """Basis of the Z2-coloring space and its dimension t."""
    basis = left_nullspace_basis(pmap.incidence_matrix())
    colorings = tuple(Z2Coloring(tuple(v)) for v in basis)
    return colorings, len(colorings)


def _vertex_faces(pmap: PlanarMap, vertex: int) -> tuple[int, ...]:
    return tuple(pmap.face_of(d) for d in pmap.darts_at(vertex))


def base_triple(pmap: PlanarMap, vertex: int, distinguished_face: int) -> dict[int, int]:
    """Proper triple at a vertex with a chosen face pinned to color 2.

    The other two faces get 1 and 3 in index order, so the triple is
    deterministic given the vertex and the distinguished face.
    """
    faces = _vertex_faces(pmap, vertex)
    if distinguished_face not in faces:
        raise ValueError(f"face {distinguished_face} is not incident to vertex {vertex}")
    others = sorted(f for f in faces if f != distinguished_face)
    return {distinguished_face: 2, others[0]: 1, others[1]: 3}


def transport(pmap: PlanarMap, colors: dict[int, int], dart: int) -> dict[int, int]:
    """Carry a proper color triple across an edge.

    ``colors`` maps the three faces at ``vertex_of(dart)`` to distinct colors
    in {1,2,3}.  The two faces flanking the dart's edge keep their colors and
    the remaining color goes to the third face at the far endpoint.
    """
    u = pmap.vertex_of[dart]
    faces_u = _vertex_faces(pmap, u)
    if set(colors) != set(faces_u) or sorted(colors.values()) != [1, 2, 3]:
        raise ValueError(f"colors {colors} are not a proper triple at vertex {u}")
    left, right = pmap.face_of(dart), pmap.face_of(dart ^ 1)
    w = pmap.vertex_of[dart ^ 1]
    faces_w = _vertex_faces(pmap, w)
    third_w = next(f for f in faces_w if f != left and f != right)
    out = {left: colors[left], right: colors[right]}
    out[third_w] = 6 - colors[left] - colors[right]
    return out


def z3_coloring(pmap: PlanarMap) -> Z3Coloring | None:
    """A proper 3-coloring of the faces, or None when an odd face exists."""
    pmap.require_trivalent()
    if pmap.face_parities().odd_faces:
        return None
    colors: dict[int, int] = {}
    for f, c in zip(sorted(_vertex_faces(pmap, 0)), (1, 2, 3)):
        colors[f] = c
    triples: dict[int, dict[int, int]] = {0: {f: colors[f] for f in _vertex_faces(pmap, 0)}}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for d in pmap.darts_at(u):
            w = pmap.vertex_of[d ^ 1]
            if w in triples:
                continue
            triples[w] = transport(pmap, triples[u], d)
            for f, c in triples[w].items():
                colors.setdefault(f, c)
            queue.append(w)
    result = tuple(colors[f] for f in range(pmap.num_faces))
    for v in range(pmap.num_vertices):
        if len({result[f] for f in _vertex_faces(pmap, v)}) != 3:
            raise AssertionError("transport produced an improper triple on an all-even map")
    return Z3Coloring(result)


def z3_to_z2(coloring: Z3Coloring) -> Z2Coloring:
    """Collapse colors: 2 becomes 0, 1 and 3 become 1."""
    return Z2Coloring(tuple(0 if c == 2 else 1 for c in coloring.colors))


# --- monodromy ----------------------------------------------------------------


@dataclass(frozen=True)
class MonodromyReport:
    """Color permutations induced by the circuits of a trivalent map.

    ``generators`` holds one permutation per co-tree edge of a spanning tree
    rooted at ``base_vertex``; ``condition_holds`` records whether every
    generator fixes color 2, the color planted on the distinguished odd face.
    A map without odd faces yields the trivial report.
    """

    base_vertex: int | None
    distinguished_face: int | None
    base_coloring: tuple[tuple[int, int], ...]
    cotree_edges: tuple[int, ...]
    generators: tuple[S3Element, ...]
    image: frozenset[S3Element]
    condition_holds: bool

    @property
    def trivial(self) -> bool:
        return all(g.is_identity for g in self.generators)

    @property
    def image_order(self) -> int:
        return len(self.image)


def monodromy(
    pmap: PlanarMap,
    base_vertex: int | None = None,
    *,
    descending_neighbors: bool = False,
) -> MonodromyReport:
    """Circuit recolorings of the base triple, one generator per co-tree edge.

    The distinguished odd face is the lowest-index odd face (incident to the
    base vertex when one is given); its color is pinned to 2.  The spanning
    tree is breadth-first with neighbor darts taken in ascending dart order,
    or descending when requested, which only changes the generators by
    conjugation.
    """
    pmap.require_trivalent()
    parities = pmap.face_parities()
    if not parities.odd_faces:
        return MonodromyReport(
            base_vertex=None,
            distinguished_face=None,
            base_coloring=(),
            cotree_edges=(),
            generators=(),
            image=frozenset({S3Element.identity()}),
            condition_holds=True,
        )
    if base_vertex is None:
        face = pmap.faces()[parities.odd_faces[0]]
        base_vertex = min(face.boundary_vertices)
        special = parities.odd_faces[0]
    else:
        incident_odd = [f for f in sorted(set(_vertex_faces(pmap, base_vertex)))
                        if f in set(parities.odd_faces)]
        if not incident_odd:
            raise ValueError(f"base vertex {base_vertex} touches no odd face")
        special = incident_odd[0]

    base = base_triple(pmap, base_vertex, special)
    triples: dict[int, dict[int, int]] = {base_vertex: base}
    tree_darts: set[int] = set()
    queue = deque([base_vertex])
    while queue:
        u = queue.popleft()
        darts = pmap.darts_at(u)
        if descending_neighbors:
            darts = tuple(reversed(darts))
        for d in darts:
            w = pmap.vertex_of[d ^ 1]
            if w in triples:
                continue
            triples[w] = transport(pmap, triples[u], d)
            tree_darts.add(d // 2)
            queue.append(w)

    cotree = tuple(e for e in range(pmap.num_edges) if e not in tree_darts)
    generators = []
    for e in cotree:
        d = 2 * e
        u, w = pmap.vertex_of[d], pmap.vertex_of[d ^ 1]
        carried = transport(pmap, triples[u], d)
        settled = triples[w]
        # transport is equivariant under global recoloring, so comparing the
        # carried triple with the settled one at w already gives the circuit's
        # permutation of the base triple
        mapping = {settled[f]: carried[f] for f in settled}
        generators.append(S3Element.from_mapping(mapping))
    image = subgroup_closure(generators)
    condition = all(g.fixes(2) for g in generators)
    return MonodromyReport(
        base_vertex=base_vertex,
        distinguished_face=special,
        base_coloring=tuple(sorted(base.items())),
        cotree_edges=cotree,
        generators=tuple(generators),
        image=image,
        condition_holds=condition,
    )


# --- classification --------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    """Case split predicting the incidence rank of a trivalent map."""

    case: int
    num_vertices: int
    num_faces: int
    odd_faces: tuple[int, ...]
    adjacent_odd_pair: tuple[int, int] | None
    monodromy: MonodromyReport
    predicted_rank: int
    predicted_count: ClassCount


def rank_prediction(case: int, num_faces: int) -> int:
    """Predicted incidence rank: m-2, m-1 or m by case."""
    if case not in (1, 2, 3):
        raise ValueError(f"case must be 1, 2 or 3, not {case}")
    return num_faces - (3 - case)


def classify(pmap: PlanarMap) -> Classification:
    """Split a trivalent map into the three structural cases.

    Case 1: every face even.  Case 2: odd faces exist, no two share an edge,
    and every monodromy generator fixes the distinguished face's color.
    Case 3: everything else.  The predicted class count is 2^(n-m+2),
    2^(n-m+1) or 2^(n-m) respectively.
    """
    pmap.require_trivalent()
    if pmap.num_vertices < 4:
        raise ThetaGraphError(
            f"map with n={pmap.num_vertices} < 4 vertices is excluded: "
            f"it has more faces ({pmap.num_faces}) than vertices"
        )
    parities = pmap.face_parities()
    report = monodromy(pmap)
    if not parities.odd_faces:
        case = 1
    elif parities.adjacent_odd_pair is None and report.condition_holds:
        case = 2
    else:
        case = 3
    n, m = pmap.num_vertices, pmap.num_faces
    return Classification(
        case=case,
        num_vertices=n,
        num_faces=m,
        odd_faces=parities.odd_faces,
        adjacent_odd_pair=parities.adjacent_odd_pair,
        monodromy=report,
        predicted_rank=rank_prediction(case, m),
        predicted_count=ClassCount(n - rank_prediction(case, m)),
    )
