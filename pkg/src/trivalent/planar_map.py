"""Combinatorial maps on the sphere encoded as rotation systems.

An edge e owns the dart pair (2e, 2e+1); ``twin`` flips the low bit.  Each
dart is attached to one vertex and ``sigma`` gives the next dart in the
cyclic rotation around that vertex.  Faces are the orbits of
``d -> sigma(twin(d))``, which walks every boundary with the face on a
consistent side, and they are numbered in increasing order of their smallest
dart so face indices are reproducible from the dart numbering alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .gf2 import BitMatrix

__all__ = [
    "MapStructureError",
    "MapFormatError",
    "NotTrivalentError",
    "twin",
    "Face",
    "FaceParities",
    "TrivalentReport",
    "PlanarMap",
    "parse_pmap",
    "format_pmap",
]


class MapStructureError(ValueError):
    """The dart data does not describe a connected rotation system."""


class MapFormatError(ValueError):
    """Malformed map file; carries the 1-based offending line number."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class NotTrivalentError(ValueError):
    """An operation restricted to validated trivalent maps was refused."""


def twin(dart: int) -> int:
    """The other dart of the same edge."""
    return dart ^ 1


@dataclass(frozen=True)
class Face:
    """One face orbit: darts in traversal order plus the vertex walk."""

    index: int
    darts: tuple[int, ...]
    boundary_vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary_vertices)


@dataclass(frozen=True)
class FaceParities:
    """Boundary-length parity of every face (1 means odd)."""

    parities: tuple[int, ...]
    odd_faces: tuple[int, ...]
    adjacent_odd_pair: tuple[int, int] | None

    @property
    def all_even(self) -> bool:
        return not self.odd_faces


@dataclass(frozen=True)
class TrivalentReport:
    """Structural check results for the trivalent bridgeless sphere class."""

    connected: bool
    three_regular: bool
    loopless: bool
    bridgeless: bool
    spherical: bool
    face_count_ok: bool
    num_vertices: int
    num_edges: int
    num_faces: int

    @property
    def passed(self) -> bool:
        return (
            self.connected
            and self.three_regular
            and self.loopless
            and self.bridgeless
            and self.spherical
            and self.face_count_ok
        )

    def failures(self) -> tuple[str, ...]:
        names = ("connected", "three_regular", "loopless", "bridgeless", "spherical", "face_count_ok")
        return tuple(name for name in names if not getattr(self, name))


@dataclass(frozen=True)
class PlanarMap:
    """Connected combinatorial map given by vertex rotations over darts."""

    sigma: tuple[int, ...]
    vertex_of: tuple[int, ...]
    num_vertices: int

    def __post_init__(self) -> None:
        n_darts = len(self.sigma)
        if n_darts == 0 or n_darts % 2:
            raise MapStructureError(f"dart count {n_darts} is not positive and even")
        if len(self.vertex_of) != n_darts:
            raise MapStructureError("vertex_of length differs from sigma length")
        if sorted(self.sigma) != list(range(n_darts)):
            raise MapStructureError("sigma is not a permutation of the darts")
        for d in range(n_darts):
            if not 0 <= self.vertex_of[d] < self.num_vertices:
                raise MapStructureError(f"dart {d} attached to unknown vertex {self.vertex_of[d]}")
            if self.vertex_of[self.sigma[d]] != self.vertex_of[d]:
                raise MapStructureError(
                    f"sigma moves dart {d} across vertices "
                    f"{self.vertex_of[d]} -> {self.vertex_of[self.sigma[d]]}"
                )
        seen_vertices = set(self.vertex_of)
        if len(seen_vertices) != self.num_vertices:
            raise MapStructureError("some vertex has no darts")
        # orbits of sigma must cover each vertex fibre in one cycle
        visited = [False] * n_darts
        for start in range(n_darts):
            if visited[start]:
                continue
            d = start
            size = 0
            while not visited[d]:
                visited[d] = True
                size += 1
                d = self.sigma[d]
            if size != sum(1 for v in self.vertex_of if v == self.vertex_of[start]):
                raise MapStructureError(
                    f"rotation at vertex {self.vertex_of[start]} splits into several cycles"
                )
        if not self._is_connected():
            raise MapStructureError("map is not connected")

    def _is_connected(self) -> bool:
        n_darts = len(self.sigma)
        seen = [False] * n_darts
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for nxt in (self.sigma[d], d ^ 1):
                if not seen[nxt]:
                    seen[nxt] = True
                    count += 1
                    stack.append(nxt)
        return count == n_darts

    # --- construction -----------------------------------------------------

    @classmethod
    def from_rotations(cls, rotations: Sequence[Sequence[int]]) -> "PlanarMap":
        """Build from one dart cycle per vertex, listed in rotation order."""
        all_darts = [d for rot in rotations for d in rot]
        n_darts = len(all_darts)
        if sorted(all_darts) != list(range(n_darts)):
            raise MapStructureError("rotation lines do not list every dart exactly once")
        sigma = [0] * n_darts
        vertex_of = [0] * n_darts
        for v, rot in enumerate(rotations):
            if not rot:
                raise MapStructureError(f"vertex {v} has no darts")
            for i, d in enumerate(rot):
                sigma[d] = rot[(i + 1) % len(rot)]
                vertex_of[d] = v
        return cls(tuple(sigma), tuple(vertex_of), len(rotations))

    @classmethod
    def from_face_cycles(cls, cycles: Sequence[Sequence[int]]) -> "PlanarMap":
        """Build a map of a simple graph from consistently oriented face cycles.

        Every directed edge must appear in exactly one cycle.  Edges are
        numbered so that the face traversal rediscovers the cycles in the
        given order, which pins down the face numbering of the result.
        """
        directed_owner: dict[tuple[int, int], int] = {}
        for f, cyc in enumerate(cycles):
            if len(cyc) < 2:
                raise MapStructureError(f"face {f} has fewer than two boundary vertices")
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                if u == v:
                    raise MapStructureError(f"face {f} contains a loop at vertex {u}")
                if (u, v) in directed_owner:
                    raise MapStructureError(
                        f"directed edge {u}->{v} appears twice; cycles are inconsistent or multigraph"
                    )
                directed_owner[(u, v)] = f
        for (u, v) in directed_owner:
            if (v, u) not in directed_owner:
                raise MapStructureError(f"directed edge {v}->{u} is missing")

        # number one seed edge per face so discovery order matches input order
        edge_id: dict[tuple[int, int], int] = {}
        dart_of: dict[tuple[int, int], int] = {}
        next_edge = 0

        def assign(u: int, v: int) -> None:
            nonlocal next_edge
            edge_id[(u, v)] = edge_id[(v, u)] = next_edge
            dart_of[(u, v)] = 2 * next_edge
            dart_of[(v, u)] = 2 * next_edge + 1
            next_edge += 1

        has_dart = [False] * len(cycles)
        for f, cyc in enumerate(cycles):
            if has_dart[f]:
                continue
            seed = None
            fallback = None
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                partner = directed_owner[(v, u)]
                if partner < f:
                    seed = (u, v)
                    break
                if fallback is None and partner == f + 1:
                    fallback = (u, v)
            seed = seed or fallback
            if seed is None:
                raise MapStructureError(
                    f"face order not realisable: face {f} shares no edge with an earlier face"
                )
            assign(*seed)
            has_dart[f] = True
            has_dart[directed_owner[(seed[1], seed[0])]] = True
        for cyc in cycles:
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                if (u, v) not in edge_id:
                    assign(u, v)

        n_darts = 2 * next_edge
        phi = [0] * n_darts
        vertex_of = [0] * n_darts
        for cyc in cycles:
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                w = cyc[(i + 2) % len(cyc)]
                phi[dart_of[(u, v)]] = dart_of[(v, w)]
                vertex_of[dart_of[(u, v)]] = u
        sigma = tuple(phi[d ^ 1] for d in range(n_darts))
        num_vertices = max(vertex_of) + 1
        return cls(sigma, tuple(vertex_of), num_vertices)

    # --- basic accessors ----------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    def next_in_face(self, dart: int) -> int:
        return self.sigma[dart ^ 1]

    @cached_property
    def _darts_by_vertex(self) -> tuple[tuple[int, ...], ...]:
        rotations: list[list[int]] = [[] for _ in range(self.num_vertices)]
        seen = [False] * self.num_darts
        for start in range(self.num_darts):
            if seen[start]:
                continue
            d = start
            while not seen[d]:
                seen[d] = True
                rotations[self.vertex_of[d]].append(d)
                d = self.sigma[d]
        return tuple(tuple(r) for r in rotations)

    def darts_at(self, vertex: int) -> tuple[int, ...]:
        """Darts at a vertex in rotation order, starting at the smallest."""
        return self._darts_by_vertex[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._darts_by_vertex[vertex])

    def endpoints(self, edge: int) -> tuple[int, int]:
        return self.vertex_of[2 * edge], self.vertex_of[2 * edge + 1]

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        return tuple(self.vertex_of[d ^ 1] for d in self._darts_by_vertex[vertex])

    # --- faces ----------------------------------------------------------------

    @cached_property
    def _face_data(self) -> tuple[tuple[Face, ...], tuple[int, ...]]:
        faces: list[Face] = []
        face_of = [-1] * self.num_darts
        for start in range(self.num_darts):
            if face_of[start] >= 0:
                continue
            orbit = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                orbit.append(d)
                d = self.sigma[d ^ 1]
            faces.append(
                Face(
                    index=len(faces),
                    darts=tuple(orbit),
                    boundary_vertices=tuple(self.vertex_of[x] for x in orbit),
                )
            )
        return tuple(faces), tuple(face_of)

    def faces(self) -> tuple[Face, ...]:
        """All face orbits, numbered by smallest contained dart."""
        return self._face_data[0]

    @property
    def num_faces(self) -> int:
        return len(self._face_data[0])

    def face_of(self, dart: int) -> int:
        return self._face_data[1][dart]

    def face_parities(self) -> FaceParities:
        faces = self.faces()
        parities = tuple(f.size % 2 for f in faces)
        odd = tuple(f.index for f in faces if f.size % 2)
        odd_set = set(odd)
        pair = None
        for e in range(self.num_edges):
            a, b = self.face_of(2 * e), self.face_of(2 * e + 1)
            if a != b and a in odd_set and b in odd_set:
                pair = (min(a, b), max(a, b))
                break
        return FaceParities(parities, odd, pair)

    # --- validation -------------------------------------------------------------

    @cached_property
    def _trivalent_report(self) -> TrivalentReport:
        three_regular = all(self.degree(v) == 3 for v in range(self.num_vertices))
        loopless = all(
            self.vertex_of[2 * e] != self.vertex_of[2 * e + 1] for e in range(self.num_edges)
        )
        bridgeless = all(
            self.face_of(2 * e) != self.face_of(2 * e + 1) for e in range(self.num_edges)
        )
        euler = self.num_vertices - self.num_edges + self.num_faces
        face_count_ok = 2 * self.num_faces == self.num_vertices + 4
        return TrivalentReport(
            connected=True,
            three_regular=three_regular,
            loopless=loopless,
            bridgeless=bridgeless,
            spherical=euler == 2,
            face_count_ok=three_regular and face_count_ok,
            num_vertices=self.num_vertices,
            num_edges=self.num_edges,
            num_faces=self.num_faces,
        )

    def validate_trivalent(self) -> TrivalentReport:
        """Check the trivalent/loopless/bridgeless/spherical contract."""
        return self._trivalent_report

    def require_trivalent(self) -> None:
        report = self._trivalent_report
        if not report.passed:
            raise NotTrivalentError(
                "map fails trivalent validation: " + ", ".join(report.failures())
            )

    # --- derived structures ------------------------------------------------------

    def incidence_matrix(self) -> BitMatrix:
        """Face-vertex incidence over GF(2): row per face, column per vertex."""
        self.require_trivalent()
        rows = []
        for face in self.faces():
            value = 0
            for v in face.vertex_set:
                value |= 1 << v
            rows.append(value)
        return BitMatrix(self.num_faces, self.num_vertices, tuple(rows))

    def dual(self) -> "PlanarMap":
        """Swap vertices and faces; darts and edge pairing are kept."""
        sigma = tuple(self.sigma[d ^ 1] for d in range(self.num_darts))
        vertex_of = self._face_data[1]
        return PlanarMap(sigma, vertex_of, self.num_faces)

    # --- isomorphism -----------------------------------------------------------

    def canonical_key(self) -> tuple[tuple[int, int], ...]:
        """Canonical traversal code, equal iff maps are orientation-isomorphic."""
        best: tuple[tuple[int, int], ...] | None = None
        for root in range(self.num_darts):
            labels = {root: 0}
            order = [root]
            code: list[tuple[int, int]] = []
            i = 0
            while i < len(order):
                d = order[i]
                i += 1
                pair = []
                for nxt in (d ^ 1, self.sigma[d]):
                    if nxt not in labels:
                        labels[nxt] = len(order)
                        order.append(nxt)
                    pair.append(labels[nxt])
                code.append((pair[0], pair[1]))
            key = tuple(code)
            if best is None or key < best:
                best = key
        assert best is not None
        return best

    # --- text format ---------------------------------------------------------------

    def to_pmap(self, comments: Iterable[str] = ()) -> str:
        return format_pmap(self, comments)


def format_pmap(pmap: PlanarMap, comments: Iterable[str] = ()) -> str:
    """Serialise in the PMAP v1 text format."""
    lines = ["PMAP 1"]
    lines.extend(f"# {c}" for c in comments)
    lines.append(f"{pmap.num_vertices} {pmap.num_edges}")
    for v in range(pmap.num_vertices):
        lines.append(" ".join(str(d) for d in pmap.darts_at(v)))
    return "\n".join(lines) + "\n"


def parse_pmap(text: str) -> PlanarMap:
    """Parse the PMAP v1 format; errors carry 1-based line numbers."""
    numbered = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.strip().startswith("#")
    ]
    if not numbered:
        raise MapFormatError(1, "empty file")
    line_no, header = numbered[0]
    if header.split() != ["PMAP", "1"]:
        raise MapFormatError(line_no, f"expected 'PMAP 1' header, got {header!r}")
    if len(numbered) < 2:
        raise MapFormatError(line_no, "missing 'V E' line")
    line_no, counts = numbered[1]
    parts = counts.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MapFormatError(line_no, f"expected 'V E' counts, got {counts!r}")
    n_vertices, n_edges = int(parts[0]), int(parts[1])
    body = numbered[2:]
    if len(body) != n_vertices:
        where = body[-1][0] if body else line_no
        raise MapFormatError(where, f"expected {n_vertices} rotation lines, found {len(body)}")
    rotations: list[list[int]] = []
    seen: dict[int, int] = {}
    for line_no, line in body:
        rot = []
        for tok in line.split():
            try:
                d = int(tok)
            except ValueError:
                raise MapFormatError(line_no, f"bad dart token {tok!r}") from None
            if not 0 <= d < 2 * n_edges:
                raise MapFormatError(line_no, f"dart {d} out of range 0..{2 * n_edges - 1}")
            if d in seen:
                raise MapFormatError(line_no, f"dart {d} already used on line {seen[d]}")
            seen[d] = line_no
            rot.append(d)
        rotations.append(rot)
    if len(seen) != 2 * n_edges:
        missing = next(d for d in range(2 * n_edges) if d not in seen)
        raise MapFormatError(body[-1][0], f"dart {missing} never assigned to a vertex")
    try:
        return PlanarMap.from_rotations(rotations)
    except MapStructureError as exc:
        raise MapFormatError(body[-1][0] if body else line_no, str(exc)) from exc
