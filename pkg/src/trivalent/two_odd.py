"""Maps with exactly two odd faces, and disk triangulations probing them.

A trivalent map with exactly two odd faces always has a one-dimensional
parity-coloring space whose nontrivial coloring vanishes on both odd faces;
``verify_two_odd_law`` checks that instance by instance.  The disk side
models the dual picture directly: two odd-degree hub vertices, each the
center of an odd wheel, joined by a strip of triangles.  Transporting a
color triple from one hub to the other decides whether the hubs are
compatible, and ``boundary_attachment_count`` computes the boundary total N
whose divisibility by 3 gates the even-degree filling of the outer polygon.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .coloring import base_triple, transport, z2_coloring_space
from .planar_map import PlanarMap
from .region_calculus import ClassCount, count_states

__all__ = [
    "DiskStructureError",
    "TriangulatedDisk",
    "parse_tri",
    "format_tri",
    "transport_along_triangles",
    "StripConfig",
    "StripBuildResult",
    "build_strip_config",
    "BoundaryCount",
    "boundary_attachment_count",
    "boundary_count_rotations",
    "TwoOddReport",
    "verify_two_odd_law",
    "transport_compatibility",
    "shortest_vertex_walk",
]


class DiskStructureError(ValueError):
    """The triangle list does not describe a triangulated disk."""


# --- triangulated disks -------------------------------------------------------


@dataclass(frozen=True)
class TriangulatedDisk:
    """A simply-connected triangulation with a distinguished boundary cycle."""

    num_vertices: int
    triangles: tuple[tuple[int, int, int], ...]
    boundary: tuple[int, ...]

    @classmethod
    def from_triangles(cls, triangles, boundary=None) -> "TriangulatedDisk":
        """Validate a triangle list and derive (or check) the boundary cycle."""
        tris = tuple(tuple(int(v) for v in t) for t in triangles)
        if not tris:
            raise DiskStructureError("no triangles")
        for i, t in enumerate(tris):
            if len(t) != 3 or len(set(t)) != 3:
                raise DiskStructureError(f"triangle {i} is not three distinct vertices: {t}")
            if min(t) < 0:
                raise DiskStructureError(f"triangle {i} has a negative vertex id: {t}")
        keys = [frozenset(t) for t in tris]
        if len(set(keys)) != len(keys):
            raise DiskStructureError("duplicate triangle")
        num_vertices = max(max(t) for t in tris) + 1
        used = {v for t in tris for v in t}
        if len(used) != num_vertices:
            missing = next(v for v in range(num_vertices) if v not in used)
            raise DiskStructureError(f"vertex {missing} appears in no triangle")

        edge_tris: dict[frozenset[int], list[int]] = {}
        for i, t in enumerate(tris):
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                edge_tris.setdefault(frozenset((a, b)), []).append(i)
        for edge, owners in edge_tris.items():
            if len(owners) > 2:
                raise DiskStructureError(
                    f"edge {tuple(sorted(edge))} lies in {len(owners)} triangles"
                )

        derived = cls._trace_boundary(edge_tris)
        if boundary is not None:
            given = tuple(int(v) for v in boundary)
            cls._check_boundary(given, edge_tris)
            derived = given

        num_edges = len(edge_tris)
        if num_vertices - num_edges + len(tris) != 1:
            raise DiskStructureError(
                f"not a disk: V-E+T = {num_vertices}-{num_edges}+{len(tris)} != 1"
            )
        cls._check_dual_connected(tris, edge_tris)
        return cls(num_vertices, tris, derived)

    @staticmethod
    def _trace_boundary(edge_tris) -> tuple[int, ...]:
        boundary_edges = [e for e, owners in edge_tris.items() if len(owners) == 1]
        if not boundary_edges:
            raise DiskStructureError("no boundary edge: surface is closed, not a disk")
        links: dict[int, list[int]] = {}
        for e in boundary_edges:
            a, b = tuple(e)
            links.setdefault(a, []).append(b)
            links.setdefault(b, []).append(a)
        for v, nb in links.items():
            if len(nb) != 2:
                raise DiskStructureError(
                    f"boundary vertex {v} lies on {len(nb)} boundary edges, not 2"
                )
        start = min(links)
        cycle = [start, min(links[start])]
        while True:
            prev, cur = cycle[-2], cycle[-1]
            nxt = links[cur][0] if links[cur][0] != prev else links[cur][1]
            if nxt == start:
                break
            cycle.append(nxt)
        if len(cycle) != len(boundary_edges):
            raise DiskStructureError("boundary edges form more than one cycle")
        return tuple(cycle)

    @staticmethod
    def _check_boundary(given: tuple[int, ...], edge_tris) -> None:
        boundary_edges = {e for e, owners in edge_tris.items() if len(owners) == 1}
        if len(given) != len(boundary_edges) or len(set(given)) != len(given):
            raise DiskStructureError("boundary walk does not match the boundary edge set")
        for i, v in enumerate(given):
            w = given[(i + 1) % len(given)]
            if frozenset((v, w)) not in boundary_edges:
                raise DiskStructureError(f"boundary walk uses non-boundary edge ({v}, {w})")

    @staticmethod
    def _check_dual_connected(tris, edge_tris) -> None:
        if len(tris) == 1:
            return
        adj: list[list[int]] = [[] for _ in tris]
        for owners in edge_tris.values():
            if len(owners) == 2:
                a, b = owners
                adj[a].append(b)
                adj[b].append(a)
        seen = {0}
        queue = deque([0])
        while queue:
            t = queue.popleft()
            for u in adj[t]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) != len(tris):
            raise DiskStructureError("triangles do not form one edge-connected piece")

    # --- queries ---------------------------------------------------------------

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    @cached_property
    def _neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for t in self.triangles:
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                nb[a].add(b)
                nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    def degree(self, vertex: int) -> int:
        return len(self._neighbors[vertex])

    @cached_property
    def boundary_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @cached_property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.num_vertices) if v not in self.boundary_set)

    def shared_edge(self, tri_a: int, tri_b: int) -> tuple[int, int] | None:
        common = set(self.triangles[tri_a]) & set(self.triangles[tri_b])
        if len(common) != 2:
            return None
        a, b = sorted(common)
        return a, b


def format_tri(disk: TriangulatedDisk, comments=()) -> str:
    """Serialise in the TRI text format."""
    lines = [f"TRI {disk.num_vertices}"]
    lines.extend(f"# {c}" for c in comments)
    lines.extend(" ".join(map(str, t)) for t in disk.triangles)
    lines.append("B " + " ".join(map(str, disk.boundary)))
    return "\n".join(lines) + "\n"


def parse_tri(text: str) -> TriangulatedDisk:
    """Parse the TRI text format: header, triangle lines, boundary line."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not rows or rows[0].split()[:1] != ["TRI"]:
        raise DiskStructureError("expected 'TRI <vertices>' header")
    header = rows[0].split()
    if len(header) != 2 or not header[1].isdigit():
        raise DiskStructureError(f"bad TRI header: {rows[0]!r}")
    triangles = []
    boundary = None
    for row in rows[1:]:
        parts = row.split()
        if parts[0] == "B":
            if boundary is not None:
                raise DiskStructureError("more than one boundary line")
            boundary = [int(p) for p in parts[1:]]
        else:
            if len(parts) != 3:
                raise DiskStructureError(f"bad triangle line: {row!r}")
            triangles.append(tuple(int(p) for p in parts))
    disk = TriangulatedDisk.from_triangles(triangles, boundary)
    if disk.num_vertices != int(header[1]):
        raise DiskStructureError(
            f"header says {header[1]} vertices, triangles use {disk.num_vertices}"
        )
    return disk


# --- color transport across triangles ----------------------------------------


def transport_along_triangles(
    disk: TriangulatedDisk, path, colors: dict[int, int]
) -> dict[int, int]:
    """Slide a proper corner coloring along a path of edge-adjacent triangles.

    ``colors`` assigns {1,2,3} to the three corners of the first triangle.
    Crossing into a neighbor keeps the shared corners and gives the opposite
    corner the remaining color.  Returns the coloring of the last triangle.
    """
    path = list(path)
    if not path:
        raise ValueError("empty triangle path")
    current = set(disk.triangles[path[0]])
    if set(colors) != current or sorted(colors.values()) != [1, 2, 3]:
        raise ValueError(f"colors {colors} are not a proper triple on triangle {path[0]}")
    colors = dict(colors)
    for t, t_next in zip(path, path[1:]):
        shared = set(disk.triangles[t]) & set(disk.triangles[t_next])
        if len(shared) != 2:
            raise ValueError(f"triangles {t} and {t_next} do not share an edge")
        opposite = next(v for v in disk.triangles[t_next] if v not in shared)
        keep = {v: colors[v] for v in shared}
        keep[opposite] = 6 - sum(keep.values())
        colors = keep
    return colors


# --- strip configurations -------------------------------------------------------


@dataclass(frozen=True)
class StripConfig:
    """Two odd wheels joined by a strip of triangles.

    A (2m+1)-wheel around one hub and a (2n+1)-wheel around the other,
    connected by ``strip_len`` triangles glued edge to edge in a fan-free
    zig-zag.  ``strip_len`` 0 means the two wheels share one rim edge.
    """

    m_wheel: int
    n_wheel: int
    strip_len: int

    def __post_init__(self) -> None:
        if self.m_wheel < 1 or self.n_wheel < 1:
            raise ValueError("wheel parameters must be at least 1")
        if self.strip_len < 0:
            raise ValueError("strip length must be nonnegative")


@dataclass(frozen=True)
class StripBuildResult:
    """A built strip configuration plus its transport verdict."""

    config: StripConfig
    disk: TriangulatedDisk
    hub_u: int
    hub_v: int
    strip_path: tuple[int, ...]
    far_hub_color: int
    compatible: bool


def build_strip_config(config: StripConfig) -> StripBuildResult:
    """Build the disk for a strip configuration and test hub compatibility.

    The first hub is vertex 0 with rim 1..2m+1; the second hub follows at
    2m+2.  Compatibility is decided by transporting the triple (hub=2,
    rim=1,3) across the strip and reading the far hub's color: compatible
    means it also receives 2.  Incompatible configurations are still built.
    """
    m, n, length = config.m_wheel, config.n_wheel, config.strip_len
    hub_u = 0
    u_rim = list(range(1, 2 * m + 2))
    hub_v = 2 * m + 2

    def w(k: int) -> int:
        # w_0 and w_1 are the shared rim vertices; later strip vertices are fresh
        if k == 0:
            return 1
        if k == 1:
            return 2
        return 2 * m + 1 + k

    if length == 0:
        v_rim = [1, 2] + [2 * m + i for i in range(3, 2 * n + 2)]
    else:
        v_rim = [w(length), w(length + 1)] + [2 * m + length + i for i in range(3, 2 * n + 2)]

    triangles: list[tuple[int, int, int]] = []
    for i in range(2 * m + 1):
        triangles.append((hub_u, u_rim[i], u_rim[(i + 1) % (2 * m + 1)]))
    for j in range(1, length + 1):
        triangles.append((w(j - 1), w(j), w(j + 1)))
    for i in range(2 * n + 1):
        triangles.append((hub_v, v_rim[i], v_rim[(i + 1) % (2 * n + 1)]))

    boundary = _strip_boundary(m, n, length, w, v_rim)
    disk = TriangulatedDisk.from_triangles(triangles, boundary)

    strip_path = (0,) + tuple(range(2 * m + 1, 2 * m + 1 + length)) + (2 * m + 1 + length,)
    colors = {hub_u: 2, w(0): 1, w(1): 3}
    final = transport_along_triangles(disk, strip_path, colors)
    far_color = final[hub_v]
    return StripBuildResult(
        config=config,
        disk=disk,
        hub_u=hub_u,
        hub_v=hub_v,
        strip_path=strip_path,
        far_hub_color=far_color,
        compatible=far_color == 2,
    )


def _strip_boundary(m: int, n: int, length: int, w, v_rim) -> list[int]:
    """Boundary walk: strip even side out, far rim, strip odd side back, near rim."""
    far_fresh = v_rim[2:]
    if length == 0:
        return [1] + list(reversed(far_fresh)) + [2] + list(range(3, 2 * m + 2))
    out_side = [w(k) for k in range(0, length + 2, 2)]
    if length % 2 == 0:
        # even side ends at the far wheel's first rim vertex w(length)
        arc = list(reversed(far_fresh))
        back_side = [w(k) for k in range(length + 1, 2, -2)]
    else:
        # even side ends at the far wheel's second rim vertex w(length+1)
        arc = list(far_fresh)
        back_side = [w(k) for k in range(length, 2, -2)]
    return out_side + arc + back_side + [2] + list(range(3, 2 * m + 2))


# --- boundary attachment count ----------------------------------------------------


@dataclass(frozen=True)
class BoundaryCount:
    """Odd/even decomposition of a disk boundary and its attachment total.

    Walking the boundary from a chosen first odd vertex gives run lengths
    h_1..h_2k of even vertices between consecutive odd ones; the total is
    sum(h_i + 1) over all runs plus the same sum over odd-positioned runs.
    """

    first_odd: int
    odd_vertices: tuple[int, ...]
    run_lengths: tuple[int, ...]
    total: int

    @property
    def pair_count(self) -> int:
        return len(self.odd_vertices) // 2


def boundary_attachment_count(disk: TriangulatedDisk, first_odd_index: int = 0) -> BoundaryCount:
    """Boundary total N for the decomposition starting at a chosen odd vertex.

    ``first_odd_index`` shifts the start within the odd boundary vertices in
    walk order; 0 is the first odd vertex after the stored boundary origin.
    """
    cycle = disk.boundary
    odd_positions = [i for i, v in enumerate(cycle) if disk.degree(v) % 2 == 1]
    if not odd_positions:
        raise DiskStructureError("boundary has no odd-degree vertex")
    if len(odd_positions) % 2:
        raise DiskStructureError(
            f"boundary has {len(odd_positions)} odd-degree vertices, an odd number"
        )
    k2 = len(odd_positions)
    shift = first_odd_index % k2
    positions = odd_positions[shift:] + odd_positions[:shift]
    gaps = []
    for i in range(k2):
        here, nxt = positions[i], positions[(i + 1) % k2]
        gaps.append((nxt - here - 1) % len(cycle))
    total = sum(g + 1 for g in gaps) + sum(g + 1 for g in gaps[0::2])
    return BoundaryCount(
        first_odd=cycle[positions[0]],
        odd_vertices=tuple(cycle[p] for p in positions),
        run_lengths=tuple(gaps),
        total=total,
    )


def boundary_count_rotations(disk: TriangulatedDisk) -> tuple[BoundaryCount, ...]:
    """The boundary count for every choice of first odd vertex."""
    first = boundary_attachment_count(disk, 0)
    return tuple(
        boundary_attachment_count(disk, i) for i in range(len(first.odd_vertices))
    )


# --- the two-odd-face law on trivalent maps ------------------------------------------


@dataclass(frozen=True)
class TwoOddReport:
    """Evidence that a two-odd-face map obeys the parity-coloring law."""

    odd_faces: tuple[int, int]
    odd_faces_adjacent: bool
    nullity: int
    coloring: tuple[int, ...]
    coloring_zero_on_odd: bool
    class_count: ClassCount
    expected_exponent: int

    @property
    def passed(self) -> bool:
        return (
            not self.odd_faces_adjacent
            and self.nullity == 1
            and self.coloring_zero_on_odd
            and self.class_count.exponent == self.expected_exponent
        )


def verify_two_odd_law(pmap: PlanarMap) -> TwoOddReport:
    """Check the invariants forced by having exactly two odd faces.

    Requires exactly two odd faces; such a map must have coloring nullity 1,
    non-adjacent odd faces, a unique nontrivial parity coloring vanishing on
    both, and class count 2^(n-m+1).
    """
    pmap.require_trivalent()
    parities = pmap.face_parities()
    if len(parities.odd_faces) != 2:
        raise ValueError(
            f"map has {len(parities.odd_faces)} odd faces, need exactly 2"
        )
    basis, nullity = z2_coloring_space(pmap)
    a, b = parities.odd_faces
    coloring = basis[0].colors if basis else ()
    zero_on_odd = bool(coloring) and coloring[a] == 0 and coloring[b] == 0
    return TwoOddReport(
        odd_faces=(a, b),
        odd_faces_adjacent=parities.adjacent_odd_pair is not None,
        nullity=nullity,
        coloring=coloring,
        coloring_zero_on_odd=zero_on_odd,
        class_count=count_states(pmap),
        expected_exponent=pmap.num_vertices - pmap.num_faces + 1,
    )


def transport_compatibility(
    pmap: PlanarMap, face_a: int, face_b: int, walk
) -> bool:
    """Transport verdict between the two odd faces along a vertex walk.

    The walk starts at a vertex on ``face_a`` and ends at one on ``face_b``;
    the triple at the start pins ``face_a`` to color 2, and the verdict is
    whether ``face_b`` also ends up colored 2.  For maps with exactly two
    odd faces the answer does not depend on the walk.
    """
    pmap.require_trivalent()
    parities = pmap.face_parities()
    if len(parities.odd_faces) != 2:
        raise ValueError(f"map has {len(parities.odd_faces)} odd faces, need exactly 2")
    if {face_a, face_b} != set(parities.odd_faces):
        raise ValueError(
            f"faces ({face_a}, {face_b}) are not the odd faces {parities.odd_faces}"
        )
    walk = [int(v) for v in walk]
    if not walk:
        raise ValueError("empty walk")
    colors = base_triple(pmap, walk[0], face_a)
    for u, v in zip(walk, walk[1:]):
        dart = next(
            (d for d in pmap.darts_at(u) if pmap.vertex_of[d ^ 1] == v), None
        )
        if dart is None:
            raise ValueError(f"walk step {u} -> {v} is not an edge")
        colors = transport(pmap, colors, dart)
    if face_b not in colors:
        raise ValueError(f"walk ends at vertex {walk[-1]}, not on face {face_b}")
    return colors[face_b] == 2


def shortest_vertex_walk(pmap: PlanarMap, source: int, target: int) -> tuple[int, ...]:
    """A breadth-first shortest vertex walk between two vertices."""
    if source == target:
        return (source,)
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in pmap.neighbors(u):
            if v not in parent:
                parent[v] = u
                if v == target:
                    path = [v]
                    while path[-1] != source:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                queue.append(v)
    raise ValueError(f"no walk from {source} to {target}")
