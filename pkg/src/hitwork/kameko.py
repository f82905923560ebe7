"""Halving and doubling maps between quotient degrees.

The down map halves a monomial whose exponents are all odd (sending
exponent j to (j-1)/2) and kills every other monomial; the up map doubles
and adds one, so down o up is the identity on monomials.  When every
monomial of the upper degree with an even exponent is hit, the down map
induces a bijection of quotients whose inverse is induced by the up map.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .f2linalg import bits_of
from .glaction import GLElement, gl_generators, induced_matrix
from .poly import Monomial, Polynomial, _raw, sq
from .quotient import QuotientBasis, degree_context, quotient_basis


def down_monomial(m: Sequence[int]) -> Optional[Monomial]:
    """Halve an all-odd monomial; None when any exponent is even."""
    if any(e % 2 == 0 for e in m):
        return None
    return tuple((e - 1) // 2 for e in m)


def up_monomial(m: Sequence[int]) -> Monomial:
    """Double every exponent and add one."""
    return tuple(2 * e + 1 for e in m)


def down_polynomial(p: Polynomial) -> Polynomial:
    terms = set()
    for t in p.terms:
        dt = down_monomial(t)
        if dt is not None:
            terms.symmetric_difference_update((dt,))
    return _raw(p.k, terms)


def up_polynomial(p: Polynomial) -> Polynomial:
    return _raw(p.k, {up_monomial(t) for t in p.terms})


def even_hypothesis(k: int, d: int):
    """Is every degree-d monomial with an even exponent hit?

    Returns (holds, failures); failures lists the offending monomials in
    ascending lexicographic order.
    """
    qb = quotient_basis(k, d)
    failures = tuple(
        m
        for m, c in zip(qb.ctx.monomials, qb.classes)
        if c != 0 and any(e % 2 == 0 for e in m)
    )
    return not failures, failures


class QuotientMap:
    """Linear map between two quotient coordinate spaces.

    Row i is the image of the i-th source representative, so a coordinate
    mask maps to the XOR of its selected rows.
    """

    __slots__ = ("src", "dst", "rows")

    def __init__(self, src: QuotientBasis, dst: QuotientBasis,
                 rows: Sequence[int]):
        if len(rows) != src.dim:
            raise ValueError("row count does not match source dimension")
        self.src = src
        self.dst = dst
        self.rows = tuple(rows)

    def apply(self, coords: int) -> int:
        out = 0
        for i in bits_of(coords):
            out ^= self.rows[i]
        return out

    def rank(self) -> int:
        ech: dict = {}
        rank = 0
        for v in self.rows:
            while v:
                j = (v & -v).bit_length() - 1
                row = ech.get(j)
                if row is None:
                    ech[j] = v
                    rank += 1
                    break
                v ^= row
        return rank

    def is_bijection(self) -> bool:
        return (
            self.src.dim == self.dst.dim and self.rank() == self.src.dim
        )

    def __repr__(self) -> str:
        return (f"QuotientMap({self.src.ctx.d} -> {self.dst.ctx.d}, "
                f"dim {self.src.dim} -> {self.dst.dim})")


def down_map_on_quotient(k: int, r: int) -> QuotientMap:
    """Induced map from degree 2r + k down to degree r."""
    src = quotient_basis(k, 2 * r + k)
    dst = quotient_basis(k, r)
    rows = []
    for m in src.reps:
        dm = down_monomial(m)
        rows.append(0 if dm is None else dst.class_of_monomial(dm))
    return QuotientMap(src, dst, rows)


def up_map_on_quotient(k: int, r: int) -> QuotientMap:
    """Induced map from degree r up to degree 2r + k (the section)."""
    src = quotient_basis(k, r)
    dst = quotient_basis(k, 2 * r + k)
    rows = [dst.class_of_monomial(up_monomial(m)) for m in src.reps]
    return QuotientMap(src, dst, rows)


def equivariance_failures(down: QuotientMap,
                          gens: Sequence[GLElement]) -> List[str]:
    """Generators g with down o g != g o down on the source quotient."""
    bad = []
    for g in gens:
        src_act = induced_matrix(g, down.src)
        dst_act = induced_matrix(g, down.dst)
        for i in range(down.src.dim):
            e = 1 << i
            if down.apply(src_act.apply(e)) != dst_act.apply(down.apply(e)):
                bad.append(str(g))
                break
    return bad


class ChainStep:
    """One halving step of an iterated chain."""

    __slots__ = ("degree", "hypothesis_holds", "failures", "down",
                 "equivariant")

    def __init__(self, degree, hypothesis_holds, failures, down, equivariant):
        self.degree = degree
        self.hypothesis_holds = hypothesis_holds
        self.failures = failures
        self.down = down
        self.equivariant = equivariant

    @property
    def ok(self) -> bool:
        return (self.hypothesis_holds and self.equivariant
                and self.down.is_bijection())


class KamekoChain:
    """Iterated halving isomorphisms from degree 12 * 2^s - 4 down to 8."""

    __slots__ = ("k", "base_degree", "steps")

    def __init__(self, k: int, base_degree: int, steps: Sequence[ChainStep]):
        self.k = k
        self.base_degree = base_degree
        self.steps = tuple(steps)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)

    @property
    def degrees(self) -> Tuple[int, ...]:
        if not self.steps:
            return (self.base_degree,)
        return tuple(s.degree for s in self.steps) + (self.base_degree,)

    def composite(self) -> QuotientMap:
        """The composed map from the top degree onto the base degree."""
        if not self.steps:
            raise ValueError("empty chain")
        first = self.steps[0].down
        rows = first.rows
        dst = first.dst
        for step in self.steps[1:]:
            rows = tuple(step.down.apply(r) for r in rows)
            dst = step.down.dst
        return QuotientMap(first.src, dst, rows)


def chain(k: int, s: int) -> KamekoChain:
    """Build and check the halving chain for degrees 12 * 2^j - 4, j <= s.

    The hypothesis is verified at every intermediate degree by direct
    computation of that degree's quotient; a failure is carried in the
    step record rather than raised, since it signals an internal error.
    """
    if k != 4:
        raise ValueError("the halving chain is specific to four variables")
    if s < 1:
        raise ValueError("need at least one halving step")
    gens = gl_generators(k)
    steps = []
    for j in range(s, 0, -1):
        d = 12 * (1 << j) - 4
        r = 12 * (1 << (j - 1)) - 4
        holds, failures = even_hypothesis(k, d)
        down = down_map_on_quotient(k, r)
        equiv = not equivariance_failures(down, gens)
        steps.append(ChainStep(d, holds, failures, down, equiv))
    return KamekoChain(k, 8, steps)


def even_image_property(k: int, t: int, sample: Polynomial) -> bool:
    """Does Sq^(2t) o up - up o Sq^t land in the even-exponent span?"""
    if t < 1:
        raise ValueError("need a positive square")
    if sample.k != k:
        raise ValueError("variable count mismatch")
    if sample.is_zero():
        return True
    diff = sq(2 * t, up_polynomial(sample)) + up_polynomial(sq(t, sample))
    return all(any(e % 2 == 0 for e in m) for m in diff.terms)


def is_sum_of_two_mersenne(n: int, exponent_bound: int) -> bool:
    """Can n be written as (2^a - 1) + (2^b - 1) with exponents in range?"""
    for a in range(exponent_bound + 1):
        rest = n - ((1 << a) - 1)
        if rest < 0:
            break
        if rest & (rest + 1) == 0:
            b = rest.bit_length()
            if b <= exponent_bound:
                return True
    return False
