"""Two classical instances of the region-flip calculus.

Signed graphs: switching a vertex set flips the sign of every edge with
exactly one endpoint inside, so signatures are acted on by rows of the
vertex-edge incidence matrix over GF(2) and a signature is switchable to
all-zero exactly when it is balanced (every circuit has even sign sum).

Link projections: connected 4-regular maps whose faces act on the crossings
lying on their boundaries.  Strands go straight through every crossing; a
single crossing is switchable in isolation exactly when the standard basis
vector lies in the row space of the face-crossing matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .gf2 import BitMatrix, BitVector, rank, solve_left
from .planar_map import PlanarMap
from .region_calculus import ClassCount, RegionSelection

__all__ = [
    "GraphStructureError",
    "AbstractGraph",
    "Signature",
    "BalanceReport",
    "switching_matrix",
    "switching_class_count",
    "is_balanced",
    "apply_switching",
    "circuit_sign_sum",
    "random_connected_multigraph",
    "NotFourRegularError",
    "LinkProjection",
    "link_region_matrix",
    "link_class_count",
    "shimizu_solve",
]


class GraphStructureError(ValueError):
    """The edge list does not describe a loopless graph on the vertices."""


class NotFourRegularError(ValueError):
    """The map has a vertex whose degree is not four."""


# --- signed graphs ----------------------------------------------------------


@dataclass(frozen=True)
class AbstractGraph:
    """Loopless multigraph given by a vertex count and an edge list."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vertices <= 0:
            raise GraphStructureError("graph needs at least one vertex")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise GraphStructureError(f"edge {i} endpoint out of range: ({u}, {v})")
            if u == v:
                raise GraphStructureError(f"edge {i} is a loop at vertex {u}")

    @classmethod
    def from_edges(cls, edges) -> "AbstractGraph":
        pairs = tuple((int(u), int(v)) for u, v in edges)
        if not pairs:
            raise GraphStructureError("edge list is empty")
        return cls(max(max(u, v) for u, v in pairs) + 1, pairs)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex list of (neighbor, edge index) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return tuple(tuple(a) for a in adj)

    def is_connected(self) -> bool:
        if self.num_vertices == 1:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w, _ in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.num_vertices

    def require_connected(self) -> None:
        if not self.is_connected():
            raise GraphStructureError("graph is disconnected")


@dataclass(frozen=True)
class Signature:
    """Edge signs as bits: 0 for positive, 1 for negative."""

    bits: BitVector

    @classmethod
    def zeros(cls, num_edges: int) -> "Signature":
        return cls(BitVector.zeros(num_edges))

    @classmethod
    def from_string(cls, text: str) -> "Signature":
        return cls(BitVector.from_string(text))

    def bit(self, edge: int) -> int:
        return self.bits.bit(edge)

    def sign(self, edge: int) -> int:
        return -1 if self.bits.bit(edge) else 1

    def to_string(self) -> str:
        return self.bits.to_string()


def switching_matrix(graph: AbstractGraph) -> BitMatrix:
    """Vertex-edge incidence over GF(2): row per vertex, column per edge."""
    rows = [0] * graph.num_vertices
    for e, (u, v) in enumerate(graph.edges):
        rows[u] |= 1 << e
        rows[v] |= 1 << e
    return BitMatrix(graph.num_vertices, graph.num_edges, tuple(rows))


def apply_switching(graph: AbstractGraph, signature: Signature, vertices) -> Signature:
    """Flip the sign of every edge with exactly one endpoint in the set."""
    chosen = set(vertices)
    value = signature.bits.value
    for e, (u, v) in enumerate(graph.edges):
        if (u in chosen) != (v in chosen):
            value ^= 1 << e
    return Signature(BitVector(graph.num_edges, value))


def switching_class_count(graph: AbstractGraph) -> ClassCount:
    """Number of switching classes, 2^(|E| - |V| + 1) for connected graphs."""
    graph.require_connected()
    return ClassCount(graph.num_edges - rank(switching_matrix(graph)))


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of a balance test with its certificate.

    Balanced signatures come with a switching set taking every sign to 0;
    unbalanced ones come with a circuit (edge index sequence) of odd sign sum.
    """

    balanced: bool
    switching_set: tuple[int, ...] | None
    odd_circuit: tuple[int, ...] | None


def is_balanced(graph: AbstractGraph, signature: Signature) -> BalanceReport:
    """Test whether every circuit has even sign sum, with a witness either way.

    Spanning-tree potentials: give the root potential 0 and each tree child
    the parent's potential plus the tree edge's sign.  Every non-tree edge
    whose sign disagrees with its endpoints' potential sum closes an odd
    circuit; if none does, switching the potential-1 vertices zeroes all signs.
    """
    graph.require_connected()
    if len(signature.bits) != graph.num_edges:
        raise ValueError(
            f"signature has {len(signature.bits)} bits for {graph.num_edges} edges"
        )
    adj = graph.adjacency()
    potential = [0] * graph.num_vertices
    parent_edge: list[int | None] = [None] * graph.num_vertices
    parent: list[int | None] = [None] * graph.num_vertices
    seen = [False] * graph.num_vertices
    seen[0] = True
    order = [0]
    queue = deque([0])
    tree_edges: set[int] = set()
    while queue:
        u = queue.popleft()
        for w, e in adj[u]:
            if not seen[w]:
                seen[w] = True
                potential[w] = potential[u] ^ signature.bit(e)
                parent[w] = u
                parent_edge[w] = e
                tree_edges.add(e)
                order.append(w)
                queue.append(w)
    for e, (u, v) in enumerate(graph.edges):
        if e in tree_edges:
            continue
        if signature.bit(e) != potential[u] ^ potential[v]:
            return BalanceReport(False, None, _closing_circuit(parent, parent_edge, u, v, e))
    chosen = tuple(v for v in range(graph.num_vertices) if potential[v])
    return BalanceReport(True, chosen, None)


def _closing_circuit(parent, parent_edge, u: int, v: int, closing: int) -> tuple[int, ...]:
    """Edges of the circuit formed by the tree path u..v plus the closing edge."""

    def root_path(x: int) -> list[int]:
        path = []
        while parent[x] is not None:
            path.append(x)
            x = parent[x]
        path.append(x)
        return path

    pu, pv = root_path(u), root_path(v)
    ancestors = set(pu)
    meet = next(x for x in pv if x in ancestors)
    edges = [parent_edge[x] for x in pu[: pu.index(meet)]]
    edges += [parent_edge[x] for x in pv[: pv.index(meet)]]
    return tuple(edges) + (closing,)


def circuit_sign_sum(signature: Signature, circuit) -> int:
    """Parity of the signs along a circuit given as edge indices."""
    total = 0
    for e in circuit:
        total ^= signature.bit(e)
    return total


def random_connected_multigraph(rng, num_vertices: int, extra_edges: int) -> AbstractGraph:
    """Random spanning tree plus extra loop-free edges; multi-edges allowed."""
    if num_vertices < 2:
        raise ValueError("need at least two vertices")
    edges = []
    for v in range(1, num_vertices):
        edges.append((rng.randrange(v), v))
    for _ in range(extra_edges):
        u = rng.randrange(num_vertices)
        v = rng.randrange(num_vertices - 1)
        if v >= u:
            v += 1
        edges.append((u, v))
    rng.shuffle(edges)
    return AbstractGraph(num_vertices, tuple(edges))


# --- link projections ----------------------------------------------------------


@dataclass(frozen=True)
class LinkProjection:
    """A connected 4-regular map viewed as a link shadow."""

    pmap: PlanarMap

    def __post_init__(self) -> None:
        bad = [v for v in range(self.pmap.num_vertices) if self.pmap.degree(v) != 4]
        if bad:
            raise NotFourRegularError(
                f"vertices {bad} do not have degree 4 (degrees "
                f"{[self.pmap.degree(v) for v in bad]})"
            )

    @property
    def num_crossings(self) -> int:
        return self.pmap.num_vertices

    @property
    def num_regions(self) -> int:
        return self.pmap.num_faces

    def straight_ahead(self, dart: int) -> int:
        """The dart leaving the far endpoint opposite the arriving edge."""
        sigma = self.pmap.sigma
        return sigma[sigma[dart ^ 1]]

    def components(self) -> tuple[int, tuple[int, ...]]:
        """Strand count and the strand label of every edge."""
        pmap = self.pmap
        neighbors: list[set[int]] = [set() for _ in range(pmap.num_edges)]
        for d in range(pmap.num_darts):
            e, f = d // 2, self.straight_ahead(d) // 2
            neighbors[e].add(f)
            neighbors[f].add(e)
        labels = [-1] * pmap.num_edges
        count = 0
        for start in range(pmap.num_edges):
            if labels[start] >= 0:
                continue
            labels[start] = count
            queue = deque([start])
            while queue:
                e = queue.popleft()
                for f in neighbors[e]:
                    if labels[f] < 0:
                        labels[f] = count
                        queue.append(f)
            count += 1
        return count, tuple(labels)


def link_region_matrix(lp: LinkProjection) -> BitMatrix:
    """Region-crossing incidence: row per face, column per crossing.

    Incidence is set membership, so a crossing visited twice by one region
    boundary still contributes a single 1.
    """
    pmap = lp.pmap
    rows = []
    for face in pmap.faces():
        value = 0
        for v in face.vertex_set:
            value |= 1 << v
        rows.append(value)
    return BitMatrix(pmap.num_faces, pmap.num_vertices, tuple(rows))


def link_class_count(lp: LinkProjection) -> ClassCount:
    """Number of non-equivalent crossing states, 2^(n - rank)."""
    return ClassCount(lp.num_crossings - rank(link_region_matrix(lp)))


def shimizu_solve(lp: LinkProjection, crossing: int) -> RegionSelection | None:
    """Regions whose combined flip changes exactly one crossing, if any.

    Solvable for every crossing exactly when the region matrix has full
    column rank n, which holds for single-strand projections (rank n-c+1).
    """
    if not (0 <= crossing < lp.num_crossings):
        raise ValueError(f"crossing {crossing} out of range 0..{lp.num_crossings - 1}")
    target = BitVector.from_indices(lp.num_crossings, [crossing])
    solution = solve_left(link_region_matrix(lp), target)
    if solution is None:
        return None
    return RegionSelection(solution)
