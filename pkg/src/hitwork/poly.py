"""Monomials, polynomials over F2, and the action of the Steenrod squares.

A monomial in k variables is a tuple of k non-negative exponents, the
degree-8 four-variable monomial x^4 y^2 z t being (4, 2, 1, 1).  A
polynomial is a set of same-arity monomials (coefficients live in F2, so
presence is the coefficient); adding a monomial twice removes it.

Text forms: a monomial prints as "(a1,a2,...,ak)", a polynomial as its
monomials joined by "+" in lexicographically decreasing exponent order,
and the zero polynomial as "0".  Whitespace is ignored on parsing.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence, Tuple

Monomial = Tuple[int, ...]


def binom_mod2(a: int, b: int) -> int:
    """C(a, b) mod 2 via the digit-domination rule: 1 iff b & (a - b) == 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return int(b & (a - b) == 0)


def is_spike(m: Sequence[int]) -> bool:
    """True when every exponent has the form 2^n - 1 (0 allowed)."""
    return all((e & (e + 1)) == 0 for e in m)


def monomial_degree(m: Sequence[int]) -> int:
    return sum(m)


class Polynomial:
    """Finite F2 sum of monomials sharing a variable count."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Iterable[Sequence[int]] = ()):
        if k < 1:
            raise ValueError("need at least one variable")
        acc = set()
        for t in terms:
            t = tuple(t)
            if len(t) != k:
                raise ValueError(f"monomial {t} does not have {k} exponents")
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in {t}")
            if t in acc:
                acc.discard(t)
            else:
                acc.add(t)
        self.k = k
        self.terms = frozenset(acc)

    @classmethod
    def zero(cls, k: int) -> "Polynomial":
        return cls(k)

    @classmethod
    def monomial(cls, m: Sequence[int]) -> "Polynomial":
        m = tuple(m)
        return cls(len(m), (m,))

    @classmethod
    def variable(cls, k: int, j: int) -> "Polynomial":
        e = [0] * k
        e[j] = 1
        return cls(k, (tuple(e),))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> frozenset:
        return frozenset(sum(t) for t in self.terms)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Common degree of the terms; raises on mixed or zero input."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree undefined for zero or mixed polynomial")
        return next(iter(degs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.k != other.k:
            raise ValueError("variable count mismatch")
        p = Polynomial.__new__(Polynomial)
        p.k = self.k
        p.terms = self.terms ^ other.terms
        return p

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.k != other.k:
            raise ValueError("variable count mismatch")
        acc = set()
        for a in self.terms:
            for b in other.terms:
                t = tuple(x + y for x, y in zip(a, b))
                if t in acc:
                    acc.discard(t)
                else:
                    acc.add(t)
        p = Polynomial.__new__(Polynomial)
        p.k = self.k
        p.terms = frozenset(acc)
        return p

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.k, self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> Tuple[Monomial, ...]:
        return tuple(sorted(self.terms, reverse=True))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(format_monomial(t) for t in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self.k}, {str(self)!r})"


def _raw(k: int, terms) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p.k = k
    p.terms = frozenset(terms)
    return p


def format_monomial(m: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in m) + ")"


def parse_monomial(text: str, k: int | None = None) -> Monomial:
    """Parse "(a1,...,ak)"; raises ValueError with a reason on bad input."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"monomial must be parenthesised: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        raise ValueError(f"empty monomial: {text!r}")
    parts = [p.strip() for p in inner.split(",")]
    if any(not p.isdigit() for p in parts):
        raise ValueError(f"bad exponent in monomial: {text!r}")
    m = tuple(int(p) for p in parts)
    if k is not None and len(m) != k:
        raise ValueError(f"expected {k} exponents, got {len(m)}: {text!r}")
    return m


def parse_polynomial(text: str, k: int | None = None) -> Polynomial:
    """Parse monomials joined by "+"; "0" is the zero polynomial."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        if k is None:
            raise ValueError("zero polynomial needs an explicit variable count")
        return Polynomial.zero(k)
    monos = []
    for chunk in s.split("+"):
        if not chunk:
            raise ValueError(f"dangling '+' in polynomial: {text!r}")
        monos.append(parse_monomial(chunk, k))
    if k is None:
        k = len(monos[0])
    for m in monos:
        if len(m) != k:
            raise ValueError("mixed variable counts in polynomial")
    return Polynomial(k, monos)


# -- Steenrod squares --------------------------------------------------------


def _submasks(a: int):
    """All submasks of a, descending, including a and 0."""
    s = a
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & a


def sq_monomial_terms(i: int, m: Sequence[int]) -> list:
    """Expand Sq^i on one monomial via the Cartan rule.

    On a power, Sq^j(x^a) = C(a, j) x^(a+j), and C(a, j) is odd exactly
    when j is a submask of a; distributing i over the variables can never
    produce the same exponent tuple twice, so no cancellation arises and
    a plain list is returned.
    """
    k = len(m)
    suffix = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        suffix[j] = suffix[j + 1] + m[j]
    out: list = []
    cur = [0] * k

    def walk(j: int, rem: int) -> None:
        if rem > suffix[j]:
            return
        if j == k - 1:
            if rem & ~m[j] == 0:
                cur[j] = m[j] + rem
                out.append(tuple(cur))
            return
        for s in _submasks(m[j]):
            if s <= rem:
                cur[j] = m[j] + s
                walk(j + 1, rem - s)
        cur[j] = m[j]

    walk(0, i)
    return out


def sq(i: int, p: Polynomial) -> Polynomial:
    """Steenrod square Sq^i on a homogeneous polynomial."""
    if i < 0:
        raise ValueError("negative square")
    if not p.is_homogeneous():
        raise ValueError("Sq^i requires a homogeneous polynomial")
    if i == 0 or p.is_zero():
        return p
    acc: set = set()
    for m in p.terms:
        for t in sq_monomial_terms(i, m):
            if t in acc:
                acc.discard(t)
            else:
                acc.add(t)
    return _raw(p.k, acc)


class SteenrodOp:
    """Formal F2 sum of composition sequences of positive squares.

    The sequence (i1, ..., im) denotes Sq^i1 o ... o Sq^im (the rightmost
    entry acts first); the empty sequence is the identity.  All sequences
    of one operation share their total degree.
    """

    __slots__ = ("sequences",)

    def __init__(self, sequences: Iterable[Sequence[int]]):
        seqs = set()
        for s in sequences:
            s = tuple(s)
            if any(e <= 0 for e in s):
                raise ValueError("squares in a sequence must be positive")
            if s in seqs:
                seqs.discard(s)
            else:
                seqs.add(s)
        degs = {sum(s) for s in seqs}
        if len(degs) > 1:
            raise ValueError("mixed-degree operation")
        self.sequences = frozenset(seqs)

    @classmethod
    def identity(cls) -> "SteenrodOp":
        return cls([()])

    @property
    def degree(self):
        degs = {sum(s) for s in self.sequences}
        return next(iter(degs)) if degs else None

    def __add__(self, other: "SteenrodOp") -> "SteenrodOp":
        return SteenrodOp(self.sequences ^ other.sequences)

    def __eq__(self, other) -> bool:
        return isinstance(other, SteenrodOp) and self.sequences == other.sequences

    def __hash__(self):
        return hash(self.sequences)

    def __len__(self) -> int:
        return len(self.sequences)

    def sorted_sequences(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(sorted(self.sequences))

    def __repr__(self) -> str:
        return f"SteenrodOp({len(self.sequences)} sequences)"


# Formal sequence sets double with each degree (leading entries never
# collide, so nothing cancels); applications beyond this cap must go
# through apply_chi, which recurses on values instead.
CHI_SEQUENCE_CAP = 20


@lru_cache(maxsize=None)
def chi(n: int) -> SteenrodOp:
    """Antipode of Sq^n as an explicit sum of composition sequences.

    Uses chi(Sq^n) = sum_{i=1..n} Sq^i o chi(Sq^(n-i)) with chi(Sq^0) the
    identity.  The set has 2^(n-1) sequences, hence the cap.
    """
    if n < 0:
        raise ValueError("negative degree")
    if n > CHI_SEQUENCE_CAP:
        raise ValueError(
            f"chi({n}) would hold 2^{n - 1} sequences; apply it to a "
            "polynomial with apply_chi instead"
        )
    if n == 0:
        return SteenrodOp.identity()
    seqs = []
    for i in range(1, n + 1):
        for s in chi(n - i).sequences:
            seqs.append((i,) + s)
    return SteenrodOp(seqs)


def apply_op(op: SteenrodOp, p: Polynomial) -> Polynomial:
    """Evaluate a formal operation: F2 sum over its composition sequences."""
    acc = Polynomial.zero(p.k)
    for s in op.sequences:
        q = p
        for i in reversed(s):
            q = sq(i, q)
        acc = acc + q
    return acc


def apply_chi(n: int, p: Polynomial) -> Polynomial:
    """Evaluate chi(Sq^n) on p without materialising sequence sets.

    Recurses on values: V(0) = p and V(m) = sum_{i=1..m} Sq^i(V(m-i)),
    which agrees with apply_op(chi(n), p) wherever the latter is feasible.
    """
    if n < 0:
        raise ValueError("negative degree")
    values = [p]
    for m in range(1, n + 1):
        acc = Polynomial.zero(p.k)
        for i in range(1, m + 1):
            acc = acc + sq(i, values[m - i])
        values.append(acc)
    return values[n]


# -- linear substitution -----------------------------------------------------


def _power_of_sum(vars_mask: int, a: int, k: int) -> Polynomial:
    """(sum of the masked variables)^a, expanded over F2.

    Frobenius splits the power over the binary digits of a: the square of
    a sum of variables is the sum of their squares, so each digit 2^b
    contributes an independent choice of one variable raised to 2^b.
    """
    if a == 0:
        return _raw(k, {(0,) * k})
    if vars_mask == 0:
        return Polynomial.zero(k)
    variables = [j for j in range(k) if (vars_mask >> j) & 1]
    terms = [(0,) * k]
    b = 0
    aa = a
    while aa:
        if aa & 1:
            grown = set()
            for t in terms:
                for j in variables:
                    nt = list(t)
                    nt[j] += 1 << b
                    nt = tuple(nt)
                    if nt in grown:
                        grown.discard(nt)
                    else:
                        grown.add(nt)
            terms = list(grown)
        aa >>= 1
        b += 1
    return _raw(k, terms)


def substitute(maps: Sequence[int], p: Polynomial) -> Polynomial:
    """Apply the algebra endomorphism sending x_j to a sum of variables.

    maps[j] is the bitmask of the variables appearing in the image of
    x_j; masks need not be invertible (zero kills the variable).
    """
    maps = tuple(maps)
    if len(maps) != p.k:
        raise ValueError("variable count mismatch")
    full = (1 << p.k) - 1
    for mask in maps:
        if mask < 0 or mask > full:
            raise ValueError("mask outside variable range")
    acc = Polynomial.zero(p.k)
    for m in p.terms:
        prod = _raw(p.k, {(0,) * p.k})
        for j, a in enumerate(m):
            if a == 0:
                continue
            prod = prod * _power_of_sum(maps[j], a, p.k)
            if prod.is_zero():
                break
        acc = acc + prod
    return acc


def truncate_variables(p: Polynomial, k2: int) -> Polynomial:
    """Reindex into the first k2 variables; the rest must not occur."""
    if not 1 <= k2 <= p.k:
        raise ValueError("bad target variable count")
    terms = []
    for t in p.terms:
        if any(e != 0 for e in t[k2:]):
            raise ValueError(f"monomial {t} uses a dropped variable")
        terms.append(t[:k2])
    return Polynomial(k2, terms)


def embed_variables(p: Polynomial, k2: int) -> Polynomial:
    """View p inside a larger variable set, padding exponents with zeros."""
    if k2 < p.k:
        raise ValueError("target variable count too small")
    pad = (0,) * (k2 - p.k)
    return _raw(k2, {t + pad for t in p.terms})
