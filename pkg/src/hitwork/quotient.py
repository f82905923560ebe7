"""Hit subspaces and quotient bases of polynomial algebras.

For k variables in degree d, the hit subspace is the span of all
Sq^(2^t)(m) with 2^t <= d and m of degree d - 2^t; spanning with the
two-power squares alone suffices because they generate all positive
operations (the full-operation oracle is checked in the test suite).
The quotient basis is canonical: monomials are scanned in ascending
lexicographic order and adopted whenever independent of the hit space
plus the representatives already taken.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import echelon
from .f2linalg import BitVector, Subspace, bits_of
from .poly import Monomial, Polynomial, _raw, sq, sq_monomial_terms


@lru_cache(maxsize=None)
def degree_monomials(k: int, d: int) -> Tuple[Monomial, ...]:
    """All degree-d monomials in k variables, ascending lexicographic."""
    if k < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("negative degree")
    if k == 1:
        return ((d,),)
    out = []
    for a in range(d + 1):
        out.extend((a,) + rest for rest in degree_monomials(k - 1, d - a))
    return tuple(out)


class DegreeContext:
    """Coordinatisation of one homogeneous piece of F2[x_1..x_k]."""

    __slots__ = ("k", "d", "monomials", "index")

    def __init__(self, k: int, d: int):
        self.k = k
        self.d = d
        self.monomials = degree_monomials(k, d)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def vector_of(self, p: Polynomial) -> int:
        if p.k != self.k:
            raise ValueError("variable count mismatch")
        v = 0
        for t in p.terms:
            if sum(t) != self.d:
                raise ValueError(f"term {t} is not of degree {self.d}")
            v ^= 1 << self.index[t]
        return v

    def polynomial_of(self, v: int) -> Polynomial:
        return _raw(self.k, {self.monomials[i] for i in bits_of(v)})

    def __repr__(self) -> str:
        return f"DegreeContext(k={self.k}, d={self.d}, dim={self.dim})"


@lru_cache(maxsize=None)
def degree_context(k: int, d: int) -> DegreeContext:
    return DegreeContext(k, d)


def square_powers(d: int) -> Tuple[int, ...]:
    """The two-power squares 2^t <= d used to span the hit subspace."""
    out = []
    t = 0
    while (1 << t) <= d:
        out.append(1 << t)
        t += 1
    return tuple(out)


def hit_generators(k: int, d: int):
    """Yield (i, m) with i a two-power <= d and deg m = d - i, in scan order."""
    for i in square_powers(d):
        for m in degree_monomials(k, d - i):
            yield i, m


def _hit_rows(ctx: DegreeContext):
    index = ctx.index
    for i, m in hit_generators(ctx.k, ctx.d):
        terms = sq_monomial_terms(i, m)
        if terms:
            yield [index[t] for t in terms]


class HitWitness:
    """Exact decomposition p = remainder + sum of Sq^i(q_i)."""

    __slots__ = ("summands", "remainder")

    def __init__(self, summands: Sequence[Tuple[int, Polynomial]], remainder: Polynomial):
        self.summands = tuple(summands)
        self.remainder = remainder

    def total(self) -> Polynomial:
        acc = self.remainder
        for i, q in self.summands:
            acc = acc + sq(i, q)
        return acc

    def __repr__(self) -> str:
        return f"HitWitness({len(self.summands)} summands)"


class QuotientBasis:
    """One degree's hit subspace, representatives and reduction data.

    classes[i] is the class of the i-th monomial of the context written
    over the representatives: bit r stands for reps[r].  Reduction of any
    polynomial is the XOR of its term classes.
    """

    __slots__ = ("ctx", "hit", "reps", "classes", "_rep_index",
                 "_witness_reducer", "_lock")

    def __init__(self, ctx: DegreeContext, hit: Subspace,
                 reps: Tuple[Monomial, ...], classes: Tuple[int, ...]):
        self.ctx = ctx
        self.hit = hit
        self.reps = reps
        self.classes = classes
        self._rep_index = {m: r for r, m in enumerate(reps)}
        self._witness_reducer = None
        self._lock = threading.Lock()

    @property
    def dim(self) -> int:
        return len(self.reps)

    def class_of_monomial(self, m: Sequence[int]) -> int:
        return self.classes[self.ctx.index[tuple(m)]]

    def class_of(self, p: Polynomial) -> int:
        """Class coordinates of p over the representatives."""
        if p.k != self.ctx.k:
            raise ValueError("variable count mismatch")
        c = 0
        index = self.ctx.index
        classes = self.classes
        for t in p.terms:
            if sum(t) != self.ctx.d:
                raise ValueError(f"term {t} is not of degree {self.ctx.d}")
            c ^= classes[index[t]]
        return c

    def rep_polynomial(self, coords: int) -> Polynomial:
        """The representative combination selected by a coordinate mask."""
        return _raw(self.ctx.k, {self.reps[r] for r in bits_of(coords)})

    def __repr__(self) -> str:
        return (f"QuotientBasis(k={self.ctx.k}, d={self.ctx.d}, "
                f"dim={self.dim})")


_quotient_cache: Dict[Tuple[int, int], QuotientBasis] = {}
_quotient_lock = threading.Lock()


def _quotient_from_scan(ctx: DegreeContext, scan) -> QuotientBasis:
    hit = Subspace(ctx.dim, scan.rows, scan.pivots)
    reps = tuple(ctx.monomials[c] for c in scan.rep_cols)
    return QuotientBasis(ctx, hit, reps, scan.classes)


def _build_quotient_basis(k: int, d: int) -> QuotientBasis:
    ctx = degree_context(k, d)
    return _quotient_from_scan(ctx, echelon.quotient_scan(ctx.dim, _hit_rows(ctx)))


def rebuild_from_hit_rows(k: int, d: int, rows: Sequence[int]) -> QuotientBasis:
    """Reconstruct a quotient basis from stored hit-space RREF rows.

    The unit-vector scan is re-run on the given span, so representatives
    and classes come out identical to a fresh build of the same span.
    """
    ctx = degree_context(k, d)
    return _quotient_from_scan(ctx, echelon.quotient_scan(ctx.dim, iter(rows)))


def quotient_basis(k: int, d: int) -> QuotientBasis:
    """Quotient basis for (k, d), memoised per process."""
    key = (k, d)
    qb = _quotient_cache.get(key)
    if qb is None:
        with _quotient_lock:
            qb = _quotient_cache.get(key)
            if qb is None:
                qb = _build_quotient_basis(k, d)
                _quotient_cache[key] = qb
    return qb


def install_quotient_basis(qb: QuotientBasis) -> None:
    """Register an externally reconstructed basis (cache loads)."""
    with _quotient_lock:
        _quotient_cache[(qb.ctx.k, qb.ctx.d)] = qb


def hit_space(k: int, d: int) -> Subspace:
    """Span of the two-power square images in context coordinates."""
    ctx = degree_context(k, d)
    rows, pivots = echelon.span_echelon(ctx.dim, _hit_rows(ctx))
    return Subspace(ctx.dim, rows, pivots)


class _WitnessReducer:
    """Augmented echelon remembering which hit generators entered a row."""

    __slots__ = ("qb", "gens", "ech")

    def __init__(self, qb: QuotientBasis):
        self.qb = qb
        ctx = qb.ctx
        self.gens = []
        ech: dict = {}
        for i, m in hit_generators(ctx.k, ctx.d):
            terms = sq_monomial_terms(i, m)
            if not terms:
                continue
            g = len(self.gens)
            self.gens.append((i, m))
            v = 0
            for t in terms:
                v ^= 1 << ctx.index[t]
            self._insert(ech, v, 1 << g, 0)
        for r, m in enumerate(qb.reps):
            self._insert(ech, 1 << ctx.index[m], 0, 1 << r)
        self.ech = ech

    @staticmethod
    def _insert(ech: dict, v: int, aug: int, cls: int) -> None:
        while v:
            j = (v & -v).bit_length() - 1
            row = ech.get(j)
            if row is None:
                ech[j] = (v, aug, cls)
                return
            v ^= row[0]
            aug ^= row[1]
            cls ^= row[2]

    def decompose(self, v: int):
        """Return (coords, aug) with v = reps[coords] + gens[aug] exactly."""
        aug = 0
        cls = 0
        ech = self.ech
        while v:
            j = (v & -v).bit_length() - 1
            row = ech[j]
            v ^= row[0]
            aug ^= row[1]
            cls ^= row[2]
        return cls, aug


def _witness_reducer(qb: QuotientBasis) -> _WitnessReducer:
    with qb._lock:
        if qb._witness_reducer is None:
            qb._witness_reducer = _WitnessReducer(qb)
    return qb._witness_reducer


def reduce(p: Polynomial, qb: QuotientBasis):
    """Normal form of p: (coordinates over reps, exact hit witness)."""
    if p.k != qb.ctx.k:
        raise ValueError("variable count mismatch")
    if not p.is_homogeneous():
        raise ValueError("reduction requires a homogeneous polynomial")
    if not p.is_zero() and p.degree() != qb.ctx.d:
        raise ValueError(f"degree {p.degree()} does not match context "
                         f"degree {qb.ctx.d}")
    if p.is_zero():
        return BitVector(qb.dim, 0), HitWitness((), Polynomial.zero(p.k))
    red = _witness_reducer(qb)
    coords, aug = red.decompose(qb.ctx.vector_of(p))
    by_power: Dict[int, set] = {}
    for g in bits_of(aug):
        i, m = red.gens[g]
        bucket = by_power.setdefault(i, set())
        bucket.symmetric_difference_update((m,))
    summands = tuple(
        (i, _raw(p.k, by_power[i])) for i in sorted(by_power) if by_power[i]
    )
    return BitVector(qb.dim, coords), HitWitness(summands, qb.rep_polynomial(coords))


def is_hit(p: Polynomial) -> bool:
    """True when p lies in the span of all positive squares' images."""
    if not p.is_homogeneous():
        raise ValueError("hit test requires a homogeneous polynomial")
    if p.is_zero():
        return True
    qb = quotient_basis(p.k, p.degree())
    return qb.class_of(p) == 0


def verify_basis(candidates: Sequence[Sequence[int]], k: int, d: int) -> bool:
    """Do the candidate classes form a basis of the (k, d) quotient?"""
    qb = quotient_basis(k, d)
    cands = [tuple(m) for m in candidates]
    for m in cands:
        if len(m) != k or sum(m) != d:
            raise ValueError(f"candidate {m} is not a degree-{d} monomial "
                             f"in {k} variables")
    if len(cands) != qb.dim:
        return False
    ech: dict = {}
    rank = 0
    for m in cands:
        v = qb.class_of_monomial(m)
        while v:
            j = (v & -v).bit_length() - 1
            row = ech.get(j)
            if row is None:
                ech[j] = v
                rank += 1
                break
            v ^= row
    return rank == qb.dim
