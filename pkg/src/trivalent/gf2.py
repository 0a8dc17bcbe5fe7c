"""Dense linear algebra over GF(2).

Vectors are stored word-packed inside arbitrary-precision integers: bit ``j``
of the payload integer is the coordinate with logical index ``j``, so bit
``j`` of machine word ``w`` covers logical index ``64*w + j``.  Row
operations are whole-row XORs, which keeps elimination, nullspace extraction
and left-solves branch-free over entire rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BitVector",
    "BitMatrix",
    "RowSpace",
    "BruteForceSizeError",
    "rank",
    "left_nullspace_basis",
    "solve_left",
    "span_size_bruteforce",
    "matrix_from_text",
    "matrix_to_text",
]

BRUTE_FORCE_MAX_ROWS = 20


class BruteForceSizeError(ValueError):
    """Raised when a brute-force enumeration would be too large to run."""


@dataclass(frozen=True)
class BitVector:
    """Immutable bit vector of fixed length over GF(2)."""

    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"payload does not fit in {self.length} bits")

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        value = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit value {b!r} is not 0 or 1")
            value |= b << length
            length += 1
        return cls(length, value)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse '0'/'1' characters; character i is coordinate i."""
        return cls.from_bits(int(c) for c in text.strip())

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVector":
        value = 0
        for i in indices:
            if not 0 <= i < length:
                raise ValueError(f"index {i} out of range for length {length}")
            value |= 1 << i
        return cls(length, value)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.value >> i) & 1

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.value >> i) & 1)

    def weight(self) -> int:
        return self.value.bit_count()

    def to_string(self) -> str:
        return "".join("1" if (self.value >> i) & 1 else "0" for i in range(self.length))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")
        return BitVector(self.length, self.value ^ other.value)

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return self.value != 0

    def __iter__(self) -> Iterator[int]:
        return ((self.value >> i) & 1 for i in range(self.length))

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class BitMatrix:
    """Row-major bit matrix; row i is the integer ``row_values[i]``."""

    rows: int
    cols: int
    row_values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.row_values) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.row_values)}")
        for i, v in enumerate(self.row_values):
            if v < 0 or v >> self.cols:
                raise ValueError(f"row {i} does not fit in {self.cols} columns")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        vectors = [BitVector.from_string(line) for line in lines]
        if not vectors:
            return cls.zeros(0, 0)
        cols = vectors[0].length
        for i, v in enumerate(vectors):
            if v.length != cols:
                raise ValueError(f"row {i} has {v.length} columns, expected {cols}")
        return cls(len(vectors), cols, tuple(v.value for v in vectors))

    @classmethod
    def from_bitvectors(cls, vectors: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not vectors:
                raise ValueError("column count required for an empty matrix")
            cols = vectors[0].length
        for i, v in enumerate(vectors):
            if v.length != cols:
                raise ValueError(f"row {i} has length {v.length}, expected {cols}")
        return cls(len(vectors), cols, tuple(v.value for v in vectors))

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_values[i])

    def column_weight(self, j: int) -> int:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range")
        return sum((v >> j) & 1 for v in self.row_values)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, v in enumerate(self.row_values):
            while v:
                low = v & -v
                out[low.bit_length() - 1] |= 1 << i
                v ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def mul_left(self, x: BitVector) -> BitVector:
        """Row-vector product x*M over GF(2)."""
        if x.length != self.rows:
            raise ValueError(f"vector length {x.length} != row count {self.rows}")
        acc = 0
        bits = x.value
        while bits:
            low = bits & -bits
            acc ^= self.row_values[low.bit_length() - 1]
            bits ^= low
        return BitVector(self.cols, acc)


class RowSpace:
    """Row space of a BitMatrix with elimination bookkeeping.

    Keeps the reduced row-echelon rows together with trackers expressing each
    echelon row as a combination of original rows, so membership tests,
    left-solves, left-nullspace extraction and coset canonicalisation all come
    from one elimination pass.
    """

    def __init__(self, matrix: BitMatrix) -> None:
        self.matrix = matrix
        # parallel lists sorted by pivot column
        self._pivot_cols: list[int] = []
        self._rows: list[int] = []
        self._trackers: list[int] = []
        self._null_trackers: list[int] = []
        for i, row in enumerate(matrix.row_values):
            cur, trk = row, 1 << i
            cur, trk = self._reduce(cur, trk)
            if cur == 0:
                self._null_trackers.append(trk)
                continue
            col = (cur & -cur).bit_length() - 1
            pos = 0
            while pos < len(self._pivot_cols) and self._pivot_cols[pos] < col:
                pos += 1
            self._pivot_cols.insert(pos, col)
            self._rows.insert(pos, cur)
            self._trackers.insert(pos, trk)
            # keep fully reduced form: clear the new pivot column elsewhere
            for k in range(len(self._rows)):
                if k != pos and (self._rows[k] >> col) & 1:
                    self._rows[k] ^= cur
                    self._trackers[k] ^= trk

    def _reduce(self, value: int, tracker: int) -> tuple[int, int]:
        for col, row, trk in zip(self._pivot_cols, self._rows, self._trackers):
            if (value >> col) & 1:
                value ^= row
                tracker ^= trk
        return value, tracker

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def nullity(self) -> int:
        return self.matrix.rows - self.rank

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(self._pivot_cols)

    def echelon_rows(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(self.matrix.cols, r) for r in self._rows)

    def contains(self, v: BitVector) -> bool:
        self._check_cols(v)
        return self._reduce(v.value, 0)[0] == 0

    def reduce(self, v: BitVector) -> BitVector:
        """Canonical coset representative: zero out all pivot coordinates."""
        self._check_cols(v)
        return BitVector(v.length, self._reduce(v.value, 0)[0])

    def solve_left(self, target: BitVector) -> BitVector | None:
        """Return x with x*M == target, or None when target is outside the row space."""
        self._check_cols(target)
        value, tracker = self._reduce(target.value, 0)
        if value != 0:
            return None
        return BitVector(self.matrix.rows, tracker)

    def nullspace_basis(self) -> tuple[BitVector, ...]:
        """Basis of {x : x*M == 0}, one vector per dependent original row."""
        return tuple(BitVector(self.matrix.rows, t) for t in self._null_trackers)

    def _check_cols(self, v: BitVector) -> None:
        if v.length != self.matrix.cols:
            raise ValueError(f"vector length {v.length} != column count {self.matrix.cols}")


def rank(matrix: BitMatrix) -> int:
    """Rank of the matrix over GF(2)."""
    return RowSpace(matrix).rank


def left_nullspace_basis(matrix: BitMatrix) -> tuple[BitVector, ...]:
    """Basis of the left nullspace {x : x*M == 0}."""
    return RowSpace(matrix).nullspace_basis()


def solve_left(matrix: BitMatrix, target: BitVector) -> BitVector | None:
    """Solve x*M == target over GF(2); None when unsolvable."""
    return RowSpace(matrix).solve_left(target)


def span_size_bruteforce(matrix: BitMatrix) -> int:
    """Count row-span elements by enumerating all row subsets.

    Exponential reference oracle for tests; refuses matrices with more than
    BRUTE_FORCE_MAX_ROWS rows.
    """
    if matrix.rows > BRUTE_FORCE_MAX_ROWS:
        raise BruteForceSizeError(
            f"{matrix.rows} rows exceed the brute-force limit of {BRUTE_FORCE_MAX_ROWS}"
        )
    seen = {0}
    acc = 0
    # Gray-code walk: one XOR per subset
    for k in range(1, 1 << matrix.rows):
        flip = (k ^ (k >> 1)) ^ ((k - 1) ^ ((k - 1) >> 1))
        acc ^= matrix.row_values[flip.bit_length() - 1]
        seen.add(acc)
    return len(seen)


def matrix_to_text(matrix: BitMatrix) -> str:
    """Serialise as a 'ROWS COLS' header line followed by one 0/1 row per line."""
    lines = [f"{matrix.rows} {matrix.cols}"]
    lines.extend(matrix.row(i).to_string() for i in range(matrix.rows))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> BitMatrix:
    """Parse the matrix text format produced by matrix_to_text."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}: expected 'ROWS COLS'")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} rows, found {len(body)}")
    values = []
    for i, line in enumerate(body):
        bits = line.strip()
        if len(bits) != cols or set(bits) - {"0", "1"}:
            raise ValueError(f"row {i} is not a {cols}-character 0/1 string")
        values.append(BitVector.from_string(bits).value)
    return BitMatrix(rows, cols, tuple(values))
