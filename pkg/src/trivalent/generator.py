"""Built-in maps and seeded generation of trivalent sphere maps.

The growth move subdivides two distinct edges on one face and joins the two
new degree-3 vertices through that face, adding two vertices, three edges and
one face while preserving connectivity, 3-regularity and bridgelessness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .planar_map import MapStructureError, PlanarMap

__all__ = [
    "BUILTIN_NAMES",
    "RNG_ALGORITHM",
    "GenConfig",
    "builtin",
    "face_edge_insertion",
    "random_trivalent",
]

RNG_ALGORITHM = "python-random-mt19937"

# Face cycles are oriented consistently (each directed edge used once) and
# ordered so the canonical face numbering reproduces the intended labelling.
_CUBE_FACES = [
    (1, 0, 4, 5),
    (2, 1, 5, 6),
    (3, 2, 6, 7),
    (0, 3, 7, 4),
    (5, 4, 7, 6),
    (0, 1, 2, 3),
]
_PRISM_FACES = [
    (1, 0, 4),
    (2, 1, 4, 5),
    (3, 2, 5),
    (0, 3, 5, 4),
    (0, 1, 2, 3),
]
_K4_FACES = [
    (0, 1, 2),
    (1, 0, 3),
    (2, 1, 3),
    (0, 2, 3),
]

# Rotation tables for the multigraph builtins (face cycles are ambiguous there).
_THETA_ROTATIONS = [[0, 2, 4], [1, 5, 3]]
_HOPF_ROTATIONS = [[0, 4, 2, 6], [1, 7, 3, 5]]
_TREFOIL_ROTATIONS = [[5, 0, 6, 11], [1, 2, 8, 7], [3, 4, 10, 9]]
_FIGURE8_ROTATIONS = [[6, 2, 8, 0], [14, 10, 1, 9], [11, 4, 12, 7], [3, 13, 5, 15]]

_ALIASES = {"cube": "g1", "prism": "g2", "k4": "g3"}
BUILTIN_NAMES = ("g1", "g2", "g3", "theta", "hopf", "trefoil", "figure8")


def builtin(name: str) -> PlanarMap:
    """Return a named builtin map.

    g1 is the cube, g2 the triangular prism, g3 the tetrahedron (all
    trivalent); theta is the 2-vertex triple edge; hopf, trefoil and figure8
    are the standard 4-regular link shadows.
    """
    key = _ALIASES.get(name.lower(), name.lower())
    if key == "g1":
        return PlanarMap.from_face_cycles(_CUBE_FACES)
    if key == "g2":
        return PlanarMap.from_face_cycles(_PRISM_FACES)
    if key == "g3":
        return PlanarMap.from_face_cycles(_K4_FACES)
    if key == "theta":
        return PlanarMap.from_rotations(_THETA_ROTATIONS)
    if key == "hopf":
        return PlanarMap.from_rotations(_HOPF_ROTATIONS)
    if key == "trefoil":
        return PlanarMap.from_rotations(_TREFOIL_ROTATIONS)
    if key == "figure8":
        return PlanarMap.from_rotations(_FIGURE8_ROTATIONS)
    raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


@dataclass(frozen=True)
class GenConfig:
    """Seeded growth run: start map, target vertex count, RNG seed."""

    target: int
    seed: int
    start: str = "theta"

    def __post_init__(self) -> None:
        if self.target % 2:
            raise ValueError(f"target vertex count {self.target} is odd")
        if self.start not in ("theta", "k4"):
            raise ValueError(f"start must be 'theta' or 'k4', not {self.start!r}")
        minimum = 2 if self.start == "theta" else 4
        if self.target < max(minimum, 4):
            raise ValueError(f"target vertex count {self.target} is below 4")

    @property
    def moves(self) -> int:
        start_n = 2 if self.start == "theta" else 4
        return (self.target - start_n) // 2


def face_edge_insertion(pmap: PlanarMap, face: int, dart_a: int, dart_b: int) -> PlanarMap:
    """Split the face between two of its darts lying on distinct edges.

    Both darts must belong to the chosen face orbit.  Their edges are
    subdivided by new vertices x and y, which are joined by a new edge running
    through the face.
    """
    faces = pmap.faces()
    if not 0 <= face < len(faces):
        raise ValueError(f"no face {face}")
    orbit = set(faces[face].darts)
    for d in (dart_a, dart_b):
        if d not in orbit:
            raise ValueError(f"dart {d} does not lie on face {face}")
    if dart_a // 2 == dart_b // 2:
        raise ValueError("darts lie on the same edge; insertion refused")

    d_count = pmap.num_darts
    ta, tb = dart_a ^ 1, dart_b ^ 1
    v = pmap.vertex_of[ta]
    q = pmap.vertex_of[tb]
    x = pmap.num_vertices
    y = x + 1
    # new darts: (D, D+1) re-closes dart_a's edge through x,
    # (D+2, D+3) re-closes dart_b's edge through y, (D+4, D+5) joins x to y
    rotations = [list(pmap.darts_at(w)) for w in range(pmap.num_vertices)]
    rotations[v][rotations[v].index(ta)] = d_count
    rotations[q][rotations[q].index(tb)] = d_count + 2
    rotations.append([ta, d_count + 4, d_count + 1])
    rotations.append([d_count + 5, d_count + 3, tb])
    return PlanarMap.from_rotations(rotations)


def _random_insertion(pmap: PlanarMap, rng: random.Random) -> PlanarMap:
    faces = pmap.faces()
    face = rng.randrange(len(faces))
    darts = faces[face].darts
    dart_a = darts[rng.randrange(len(darts))]
    choices = [d for d in darts if d // 2 != dart_a // 2]
    if not choices:
        raise MapStructureError(f"face {face} has a single underlying edge")
    dart_b = choices[rng.randrange(len(choices))]
    return face_edge_insertion(pmap, face, dart_a, dart_b)


def random_trivalent(config: GenConfig) -> PlanarMap:
    """Grow a random trivalent sphere map; identical seeds give identical maps."""
    rng = random.Random(config.seed)
    pmap = builtin("theta" if config.start == "theta" else "g3")
    for _ in range(config.moves):
        pmap = _random_insertion(pmap, rng)
    return pmap
