"""Exact linear algebra over GF(2) with bit-packed rows.

Rows and vectors are Python ints: bit i (little-endian) is column i.
A Subspace keeps a reduced row echelon basis whose pivots (the lowest
set bit of each row) strictly increase row by row.  The reduction rule,
lowest free column wins with rows processed in input order, makes every
basis canonical, so subspace equality is plain row comparison.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


def lowest_set_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(x: int):
    """Yield the indices of the set bits of x, ascending."""
    while x:
        b = (x & -x).bit_length() - 1
        yield b
        x &= x - 1


class BitVector:
    """Length-tagged vector over GF(2)."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("negative length")
        if bits < 0 or bits >> length:
            raise ValueError("bits outside declared length")
        self.length = length
        self.bits = bits

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVector":
        bits = 0
        for i in indices:
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "BitVector":
        bits = 0
        for i, e in enumerate(entries):
            if e & 1:
                bits |= 1 << i
        return cls(len(entries), bits)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.length, self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def support(self) -> tuple:
        return tuple(bits_of(self.bits))

    def __repr__(self) -> str:
        return f"BitVector({self.length}, 0x{self.bits:x})"


class BitMatrix:
    """Row-major GF(2) matrix; all rows share a column count."""

    __slots__ = ("cols", "rows")

    def __init__(self, cols: int, rows: Iterable[int]):
        if cols < 0:
            raise ValueError("negative column count")
        rows = tuple(rows)
        for r in rows:
            if r < 0 or r >> cols:
                raise ValueError("row outside column range")
        self.cols = cols
        self.rows = rows

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        """Build from 0/1 nested sequences."""
        if cols is None:
            cols = len(entries[0]) if entries else 0
        rows = []
        for e in entries:
            if len(e) != cols:
                raise ValueError("ragged rows")
            bits = 0
            for i, v in enumerate(e):
                if v & 1:
                    bits |= 1 << i
            rows.append(bits)
        return cls(cols, rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "BitMatrix":
        cols = self.nrows
        out = [0] * self.cols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                out[j] |= 1 << i
        return BitMatrix(cols, out)

    def mul_vector(self, v: int) -> int:
        """Apply to a column vector: bit i of the result is <row_i, v>."""
        if v < 0 or v >> self.cols:
            raise ValueError("vector outside column range")
        out = 0
        for i, r in enumerate(self.rows):
            if parity(r & v):
                out |= 1 << i
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.cols == other.cols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.cols, self.rows))

    def __repr__(self) -> str:
        return f"BitMatrix({self.cols}, {len(self.rows)} rows)"


def _echelon_insert(ech: dict, v: int) -> Optional[int]:
    """Reduce v against pivot rows, installing it if independent.

    ech maps pivot column -> row.  Returns the new pivot, or None when v
    reduced to zero.
    """
    while v:
        j = (v & -v).bit_length() - 1
        row = ech.get(j)
        if row is None:
            ech[j] = v
            return j
        v ^= row
    return None


def _rref_rows(ech: dict) -> tuple:
    """Back-eliminate an echelon dict into canonical RREF row order."""
    pivots = sorted(ech)
    for j in reversed(pivots):
        rj = ech[j]
        for j2 in pivots:
            if j2 >= j:
                break
            if (ech[j2] >> j) & 1:
                ech[j2] ^= rj
    return tuple(ech[j] for j in pivots), tuple(pivots)


class Subspace:
    """Subspace of F2^n held as a canonical reduced row echelon basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, rows: Sequence[int], pivots: Sequence[int]):
        rows = tuple(rows)
        pivots = tuple(pivots)
        if len(rows) != len(pivots):
            raise ValueError("rows/pivots length mismatch")
        prev = -1
        for r, p in zip(rows, pivots):
            if r <= 0 or r >> ambient_dim or p <= prev:
                raise ValueError("not a canonical echelon basis")
            if lowest_set_bit(r) != p:
                raise ValueError("pivot is not the lowest set bit")
            prev = p
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(1 << i for i in range(ambient_dim)),
                   tuple(range(ambient_dim)))

    @classmethod
    def from_rows(cls, ambient_dim: int, rows: Iterable[int]) -> "Subspace":
        sub, _ = rref(BitMatrix(ambient_dim, rows))
        return sub

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_matrix(self) -> BitMatrix:
        return BitMatrix(self.ambient_dim, self.rows)

    def reduce_mod(self, v: int) -> int:
        """Canonical coset representative: v with every pivot column cleared."""
        for r, p in zip(self.rows, self.pivots):
            if (v >> p) & 1:
                v ^= r
        return v

    def contains(self, v) -> bool:
        v = self._coerce(v)
        return self.reduce_mod(v) == 0

    def membership(self, v):
        """Return (is_member, coefficients over the basis rows)."""
        v = self._coerce(v)
        coeffs = 0
        for i, p in enumerate(self.pivots):
            if (v >> p) & 1:
                coeffs |= 1 << i
        rebuilt = 0
        for i in bits_of(coeffs):
            rebuilt ^= self.rows[i]
        if rebuilt != v:
            return False, None
        return True, BitVector(self.dim, coeffs)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_rows(self.ambient_dim, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: eliminate the shared low half of [a|a] and [b|0] rows.

        Once a row's low half dies, its high half (touched only by the
        first-block copies) is an element of both spans.
        """
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        n = self.ambient_dim
        ech: dict = {}
        for r in self.rows:
            _echelon_insert(ech, (r << n) | r)
        for r in other.rows:
            _echelon_insert(ech, r)
        low_mask = (1 << n) - 1
        inter = [row >> n for row in ech.values() if (row & low_mask) == 0]
        return Subspace.from_rows(n, inter)

    def contains_subspace(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(r) for r in other.rows)

    def enumerate_vectors(self):
        """Yield every vector of the span (use only for small dimensions)."""
        if self.dim > 24:
            raise ValueError("span too large to enumerate")
        for mask in range(1 << self.dim):
            v = 0
            for i in bits_of(mask):
                v ^= self.rows[i]
            yield v

    def _coerce(self, v) -> int:
        if isinstance(v, BitVector):
            if v.length != self.ambient_dim:
                raise ValueError("vector length mismatch")
            return v.bits
        v = int(v)
        if v < 0 or v >> self.ambient_dim:
            raise ValueError("vector outside ambient dimension")
        return v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient_dim}, dim={self.dim})"


def rref(m: BitMatrix):
    """Reduced row echelon form of the row space.  Returns (Subspace, rank)."""
    ech: dict = {}
    for v in m.rows:
        _echelon_insert(ech, v)
    rows, pivots = _rref_rows(ech)
    sub = Subspace(m.cols, rows, pivots)
    return sub, sub.dim


def kernel(m: BitMatrix) -> Subspace:
    """Null space {x : m @ x = 0} of m acting on column vectors."""
    sub, _ = rref(m)
    pivot_set = set(sub.pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(sub.rows, sub.pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return Subspace.from_rows(m.cols, basis)
