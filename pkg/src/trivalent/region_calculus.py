"""States of a trivalent map under region selections.

A state assigns one bit per vertex.  Selecting a set of faces flips every
vertex on their boundaries, i.e. adds the corresponding incidence-matrix rows
over GF(2), so two states are equivalent exactly when their difference lies
in the row space and the number of classes is 2^(n - rank).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import BitMatrix, BitVector, RowSpace
from .planar_map import PlanarMap

__all__ = [
    "State",
    "RegionSelection",
    "ClassCount",
    "region_system",
    "apply_regions",
    "count_states",
    "are_equivalent",
    "class_representative",
]


@dataclass(frozen=True)
class State:
    """One bit per vertex."""

    bits: BitVector

    @classmethod
    def zeros(cls, n: int) -> "State":
        return cls(BitVector.zeros(n))

    @classmethod
    def ones(cls, n: int) -> "State":
        return cls(BitVector(n, (1 << n) - 1))

    @classmethod
    def from_string(cls, text: str) -> "State":
        return cls(BitVector.from_string(text))

    def to_string(self) -> str:
        return self.bits.to_string()


@dataclass(frozen=True)
class RegionSelection:
    """One bit per face; set bits are the selected regions."""

    bits: BitVector

    @classmethod
    def from_string(cls, text: str) -> "RegionSelection":
        return cls(BitVector.from_string(text))

    @classmethod
    def from_indices(cls, num_faces: int, indices) -> "RegionSelection":
        return cls(BitVector.from_indices(num_faces, indices))

    def indices(self) -> tuple[int, ...]:
        return self.bits.indices()

    def to_string(self) -> str:
        return self.bits.to_string()


@dataclass(frozen=True)
class ClassCount:
    """A power of two kept as its exponent, since counts grow with n."""

    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"negative exponent {self.exponent}")

    @property
    def value(self) -> int:
        return 1 << self.exponent

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"2^{self.exponent}"


@lru_cache(maxsize=None)
def region_system(pmap: PlanarMap) -> tuple[BitMatrix, RowSpace]:
    """Incidence matrix and its eliminated row space, built once per map."""
    matrix = pmap.incidence_matrix()
    return matrix, RowSpace(matrix)


def apply_regions(pmap: PlanarMap, state: State, selection: RegionSelection) -> State:
    """Flip every vertex on the boundary of each selected region."""
    matrix, _ = region_system(pmap)
    if selection.bits.length != matrix.rows:
        raise ValueError(f"selection length {selection.bits.length} != face count {matrix.rows}")
    if state.bits.length != matrix.cols:
        raise ValueError(f"state length {state.bits.length} != vertex count {matrix.cols}")
    return State(state.bits ^ matrix.mul_left(selection.bits))


def count_states(pmap: PlanarMap) -> ClassCount:
    """Number of non-equivalent states, as a power of two."""
    matrix, space = region_system(pmap)
    return ClassCount(matrix.cols - space.rank)


def are_equivalent(pmap: PlanarMap, s1: State, s2: State) -> RegionSelection | None:
    """A region selection carrying s1 to s2, or None when none exists."""
    matrix, space = region_system(pmap)
    for s in (s1, s2):
        if s.bits.length != matrix.cols:
            raise ValueError(f"state length {s.bits.length} != vertex count {matrix.cols}")
    x = space.solve_left(s1.bits ^ s2.bits)
    return None if x is None else RegionSelection(x)


def class_representative(pmap: PlanarMap, state: State) -> State:
    """Canonical class member: the state with zeroed pivot coordinates."""
    matrix, space = region_system(pmap)
    if state.bits.length != matrix.cols:
        raise ValueError(f"state length {state.bits.length} != vertex count {matrix.cols}")
    return State(space.reduce(state.bits))
