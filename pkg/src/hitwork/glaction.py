"""Linear group actions on polynomial algebras and their quotients.

A GLElement stores, per variable, the bitmask of variables in its image,
so the transvection sending t to x + t in four variables is the masks
(0b0001, 0b0010, 0b0100, 0b1001).  Text form: one k-bit group per
variable, "1000 0100 0010 1001" for that transvection, character j of a
group marking variable j.
"""

from __future__ import annotations

import itertools
from typing import Iterable, List, Sequence, Tuple

from .f2linalg import BitMatrix, Subspace, bits_of, kernel
from .poly import Monomial, Polynomial, substitute
from .quotient import QuotientBasis


def _mask_rank(maps: Sequence[int], k: int) -> int:
    ech: dict = {}
    rank = 0
    for v in maps:
        while v:
            j = (v & -v).bit_length() - 1
            row = ech.get(j)
            if row is None:
                ech[j] = v
                rank += 1
                break
            v ^= row
    return rank


class GLElement:
    """Invertible linear substitution over F2."""

    __slots__ = ("k", "maps")

    def __init__(self, maps: Sequence[int]):
        maps = tuple(maps)
        k = len(maps)
        if k < 1:
            raise ValueError("need at least one variable")
        full = (1 << k) - 1
        for m in maps:
            if m < 0 or m > full:
                raise ValueError("mask outside variable range")
        if _mask_rank(maps, k) != k:
            raise ValueError("substitution is not invertible")
        self.k = k
        self.maps = maps

    @classmethod
    def identity(cls, k: int) -> "GLElement":
        return cls(tuple(1 << j for j in range(k)))

    @classmethod
    def transposition(cls, k: int, a: int, b: int) -> "GLElement":
        maps = [1 << j for j in range(k)]
        maps[a], maps[b] = maps[b], maps[a]
        return cls(maps)

    @classmethod
    def transvection(cls, k: int, src: int, dst: int) -> "GLElement":
        """x_dst gains x_src; all other variables are fixed."""
        if src == dst:
            raise ValueError("transvection needs distinct variables")
        maps = [1 << j for j in range(k)]
        maps[dst] |= 1 << src
        return cls(maps)

    @classmethod
    def parse(cls, text: str) -> "GLElement":
        groups = text.split()
        k = len(groups)
        maps = []
        for g in groups:
            if len(g) != k or any(ch not in "01" for ch in g):
                raise ValueError(f"bad substitution text: {text!r}")
            maps.append(sum(1 << j for j, ch in enumerate(g) if ch == "1"))
        return cls(maps)

    def __str__(self) -> str:
        return " ".join(
            "".join("1" if (m >> j) & 1 else "0" for j in range(self.k))
            for m in self.maps
        )

    def __matmul__(self, other: "GLElement") -> "GLElement":
        """Composition: (self @ other) acts as other first, then self."""
        if self.k != other.k:
            raise ValueError("variable count mismatch")
        maps = []
        for m in other.maps:
            acc = 0
            for i in bits_of(m):
                acc ^= self.maps[i]
            maps.append(acc)
        return GLElement(maps)

    def act(self, p: Polynomial) -> Polynomial:
        return substitute(self.maps, p)

    def is_identity(self) -> bool:
        return all(m == 1 << j for j, m in enumerate(self.maps))

    def __eq__(self, other) -> bool:
        return isinstance(other, GLElement) and self.maps == other.maps

    def __hash__(self):
        return hash(self.maps)

    def __repr__(self) -> str:
        return f"GLElement({str(self)!r})"


def gl_generators(k: int) -> List[GLElement]:
    """Elementary transvections plus adjacent transpositions.

    The k(k-1) transvections already generate the full group for k >= 2;
    the transpositions come along for symmetric-group work.  For k = 1
    only the identity exists.
    """
    if k < 1:
        raise ValueError("need at least one variable")
    if k == 1:
        return [GLElement.identity(1)]
    gens = [
        GLElement.transvection(k, i, j)
        for i in range(k)
        for j in range(k)
        if i != j
    ]
    gens.extend(GLElement.transposition(k, i, i + 1) for i in range(k - 1))
    return gens


def symmetric_generators(k: int) -> List[GLElement]:
    """Adjacent transpositions generating the symmetric subgroup."""
    if k == 1:
        return [GLElement.identity(1)]
    return [GLElement.transposition(k, i, i + 1) for i in range(k - 1)]


def transvection_generators(k: int) -> List[GLElement]:
    if k == 1:
        return [GLElement.identity(1)]
    return [
        GLElement.transvection(k, i, j)
        for i in range(k)
        for j in range(k)
        if i != j
    ]


class InducedAction:
    """Matrix of one group element on a quotient's class coordinates.

    Row r is the class of the image of representative r, so a class
    vector maps to the XOR of the rows its bits select.
    """

    __slots__ = ("qb", "element", "rows")

    def __init__(self, qb: QuotientBasis, element: GLElement,
                 rows: Sequence[int]):
        rows = tuple(rows)
        if len(rows) != qb.dim:
            raise ValueError("row count does not match quotient dimension")
        if _mask_rank(rows, qb.dim) != qb.dim:
            raise ValueError("induced matrix is not invertible")
        self.qb = qb
        self.element = element
        self.rows = rows

    def apply(self, coords: int) -> int:
        out = 0
        for i in bits_of(coords):
            out ^= self.rows[i]
        return out

    def then(self, other: "InducedAction") -> "InducedAction":
        """Matrix of acting by self first, then by other."""
        return InducedAction(self.qb, other.element @ self.element,
                             tuple(other.apply(r) for r in self.rows))

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self.rows))

    def matrix(self) -> BitMatrix:
        return BitMatrix(self.qb.dim, self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InducedAction)
            and self.qb is other.qb
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((id(self.qb), self.rows))

    def __repr__(self) -> str:
        return f"InducedAction(dim={self.qb.dim}, g={str(self.element)!r})"


def induced_matrix(g: GLElement, qb: QuotientBasis) -> InducedAction:
    """Action of g on the quotient, column-by-column over representatives."""
    if g.k != qb.ctx.k:
        raise ValueError("variable count mismatch")
    rows = [qb.class_of(g.act(Polynomial.monomial(m))) for m in qb.reps]
    return InducedAction(qb, g, rows)


def fixed_space(action: InducedAction) -> Subspace:
    """Solutions of v @ M = v, i.e. the 1-eigenspace of the action."""
    dim = action.qb.dim
    diff = BitMatrix(dim, tuple(r ^ (1 << i) for i, r in enumerate(action.rows)))
    return kernel(diff.transpose())


def invariants(qb: QuotientBasis, gens: Iterable[GLElement]) -> Subspace:
    """Common fixed space of the generators (hence of the whole group)."""
    space = Subspace.full(qb.dim)
    for g in gens:
        if g.k != qb.ctx.k:
            raise ValueError("variable count mismatch")
        space = space.intersect(fixed_space(induced_matrix(g, qb)))
        if space.dim == 0:
            break
    return space


def family_orbit(m: Sequence[int]) -> Tuple[Monomial, ...]:
    """Orbit of a monomial under variable permutations, descending lex."""
    return tuple(sorted({p for p in itertools.permutations(tuple(m))},
                        reverse=True))


def zeroing_maps(k: int, killed: Iterable[int]) -> Tuple[int, ...]:
    """Substitution masks fixing every variable except the killed ones."""
    killed = set(killed)
    return tuple(0 if j in killed else 1 << j for j in range(k))
