"""Submodule spinning and the lattice of the degree-8 quotient module.

A ModuleContext is a coordinate space together with the invertible
matrices of a fixed generator list; spinning closes a set of vectors
under those matrices.  The named lattice (nodes 0, 4, 20, 24, 25, 30,
30', 31, 35, 45, 49, 55 with labelled covering edges) is rebuilt from
shipped generator lists and checked edge by edge.
"""

from __future__ import annotations

import random
from importlib import resources
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .f2linalg import BitMatrix, Subspace, bits_of, kernel
from .families import FAMILIES
from .glaction import GLElement, induced_matrix
from .poly import Polynomial, parse_polynomial
from .quotient import QuotientBasis

IRREDUCIBLE_DIMENSIONS = {
    "1": 1,
    "N": 4,
    "N*": 4,
    "Lambda": 6,
    "S": 14,
    "T": 20,
    "T*": 20,
    "St": 64,
}

# Covering edges of the degree-8 lattice; the label names the quotient
# module of the pair, M being the 25-dimensional non-irreducible piece.
FIGURE_NODES = ("55", "49", "45", "35", "31", "30'", "30", "25", "24",
                "20", "4", "0")

FIGURE_EDGES = (
    ("55", "49", "Lambda"),
    ("55", "30'", "M"),
    ("49", "45", "N"),
    ("49", "35", "S"),
    ("45", "31", "S"),
    ("35", "31", "N"),
    ("31", "30", "1"),
    ("31", "25", "Lambda"),
    ("30'", "24", "Lambda"),
    ("30", "24", "Lambda"),
    ("25", "24", "1"),
    ("24", "20", "N*"),
    ("24", "4", "T"),
    ("4", "0", "N*"),
    ("20", "0", "T"),
)

EDGE_LABEL_DIMS = dict(IRREDUCIBLE_DIMENSIONS, M=25)

COMPOSITION_DIMS_55 = (1, 4, 4, 6, 6, 14, 20)


def _apply_rows(rows: Sequence[int], v: int) -> int:
    out = 0
    for i in bits_of(v):
        out ^= rows[i]
    return out


def _rows_rank(rows: Sequence[int]) -> int:
    ech: dict = {}
    rank = 0
    for v in rows:
        while v:
            j = (v & -v).bit_length() - 1
            row = ech.get(j)
            if row is None:
                ech[j] = v
                rank += 1
                break
            v ^= row
    return rank


class ModuleContext:
    """A coordinate space with the action matrices of fixed generators."""

    __slots__ = ("dim", "actions", "qb")

    def __init__(self, dim: int, actions: Sequence[Sequence[int]],
                 qb: Optional[QuotientBasis] = None):
        acts = tuple(tuple(rows) for rows in actions)
        for rows in acts:
            if len(rows) != dim:
                raise ValueError("action size does not match dimension")
            if _rows_rank(rows) != dim:
                raise ValueError("action matrix is not invertible")
        self.dim = dim
        self.actions = acts
        self.qb = qb

    @classmethod
    def for_quotient(cls, qb: QuotientBasis,
                     gens: Iterable[GLElement]) -> "ModuleContext":
        actions = [induced_matrix(g, qb).rows for g in gens]
        return cls(qb.dim, actions, qb)

    def __repr__(self) -> str:
        return f"ModuleContext(dim={self.dim}, {len(self.actions)} actions)"


class Submodule:
    """A subspace closed under every action of its context."""

    __slots__ = ("ctx", "space")

    def __init__(self, ctx: ModuleContext, space: Subspace):
        if space.ambient_dim != ctx.dim:
            raise ValueError("ambient dimension mismatch")
        self.ctx = ctx
        self.space = space
        if not self.closure_holds():
            raise ValueError("subspace is not closed under the actions")

    @classmethod
    def _spun(cls, ctx: ModuleContext, space: Subspace) -> "Submodule":
        """Internal: the space is closed by construction."""
        self = object.__new__(cls)
        self.ctx = ctx
        self.space = space
        return self

    def closure_holds(self) -> bool:
        return all(
            self.space.contains(_apply_rows(rows, b))
            for rows in self.ctx.actions
            for b in self.space.rows
        )

    @property
    def dim(self) -> int:
        return self.space.dim

    def __repr__(self) -> str:
        return f"Submodule(dim={self.dim} of {self.ctx.dim})"


def spin(ctx: ModuleContext, vectors: Iterable[int]) -> Submodule:
    """Smallest action-closed subspace containing the given vectors.

    The worklist closure stops early once the echelon fills the ambient
    space, since the result can only be everything from there on.
    """
    dim = ctx.dim
    ech: dict = {}
    work: List[int] = []

    def insert(v: int) -> None:
        while v:
            j = (v & -v).bit_length() - 1
            row = ech.get(j)
            if row is None:
                ech[j] = v
                work.append(v)
                return
            v ^= row

    for v in vectors:
        if v < 0 or v >> dim:
            raise ValueError("vector outside the ambient dimension")
        insert(v)
    while work and len(ech) < dim:
        v = work.pop()
        for rows in ctx.actions:
            out = 0
            vv = v
            while vv:
                out ^= rows[(vv & -vv).bit_length() - 1]
                vv &= vv - 1
            insert(out)
            if len(ech) == dim:
                break
    if len(ech) == dim:
        return Submodule._spun(ctx, Subspace.full(dim))
    return Submodule._spun(ctx, Subspace.from_rows(dim, ech.values()))


def spin_polynomials(ctx: ModuleContext,
                     polys: Iterable[Polynomial]) -> Submodule:
    """Spin the classes of polynomials (contexts built on a quotient)."""
    if ctx.qb is None:
        raise ValueError("context carries no quotient basis")
    return spin(ctx, (ctx.qb.class_of(p) for p in polys))


def sub_context(ctx: ModuleContext, sub: Submodule) -> ModuleContext:
    """Action matrices restricted to the submodule, in its basis coordinates."""
    space = sub.space
    actions = []
    for rows in ctx.actions:
        new_rows = []
        for b in space.rows:
            ok, coeffs = space.membership(_apply_rows(rows, b))
            if not ok:
                raise ValueError("subspace is not closed under the actions")
            new_rows.append(coeffs.bits)
        actions.append(new_rows)
    return ModuleContext(space.dim, actions)


def quotient_context(ctx: ModuleContext, sub: Submodule) -> ModuleContext:
    """Induced actions on complement coordinates modulo the submodule."""
    space = sub.space
    comp = [j for j in range(ctx.dim) if j not in set(space.pivots)]
    pos = {j: i for i, j in enumerate(comp)}

    def project(v: int) -> int:
        v = space.reduce_mod(v)
        out = 0
        for j in bits_of(v):
            out |= 1 << pos[j]
        return out

    actions = []
    for rows in ctx.actions:
        new_rows = [project(_apply_rows(rows, 1 << j)) for j in comp]
        actions.append(new_rows)
    return ModuleContext(len(comp), actions)


def _matmul_rows(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """Row matrix of acting by a first, then b."""
    return tuple(_apply_rows(b, r) for r in a)


def _transpose_rows(rows: Sequence[int], dim: int) -> Tuple[int, ...]:
    out = [0] * dim
    for i, r in enumerate(rows):
        for j in bits_of(r):
            out[j] |= 1 << i
    return tuple(out)


def _common_fixed_rows(ctx: ModuleContext) -> Tuple[int, ...]:
    space = Subspace.full(ctx.dim)
    for rows in ctx.actions:
        diff = BitMatrix(ctx.dim,
                         tuple(r ^ (1 << i) for i, r in enumerate(rows)))
        space = space.intersect(kernel(diff.transpose()))
        if space.dim == 0:
            break
    return space.rows


def _algebra_elements(actions: Sequence[Sequence[int]], dim: int,
                      rng: random.Random, count: int):
    """Small deterministic combinations of the actions, then seeded words."""
    ident = tuple(1 << i for i in range(dim))
    for a in actions:
        yield tuple(r ^ e for r, e in zip(a, ident))
    for i in range(len(actions)):
        for j in range(i + 1, len(actions)):
            yield tuple(x ^ y for x, y in zip(actions[i], actions[j]))
    for i in range(len(actions)):
        for j in range(len(actions)):
            if i != j:
                prod = _matmul_rows(actions[i], actions[j])
                yield tuple(r ^ e for r, e in zip(prod, ident))
    for _ in range(count):
        acc = None
        for _ in range(rng.randrange(2, 4)):
            w = actions[rng.randrange(len(actions))]
            for _ in range(rng.randrange(0, 3)):
                w = _matmul_rows(w, actions[rng.randrange(len(actions))])
            acc = w if acc is None else tuple(x ^ y for x, y in zip(acc, w))
        yield acc


def _left_null_rows(theta: Sequence[int], dim: int) -> Subspace:
    return kernel(BitMatrix(dim, theta).transpose())


def _find_proper_submodule(ctx: ModuleContext, rng: random.Random,
                           trials: int) -> Optional[Submodule]:
    """Locate a proper nonzero submodule, escalating candidate sources.

    Order: ambient basis vectors, the common fixed space (1-dimensional
    submodules are trivial modules, so they live there), seeded random
    vectors, and finally kernel vectors of algebra elements on both the
    module and its transpose (a transpose submodule dualises back via
    its annihilator).  Single-vector spinning alone misses extensions
    whose socle occupies a vanishing fraction of the space.
    """
    dim = ctx.dim
    if dim <= 1:
        return None

    def proper(vectors, context) -> Optional[Submodule]:
        for v in vectors:
            s = spin(context, [v])
            if 0 < s.dim < dim:
                return s
        return None

    found = proper((1 << i for i in range(dim)), ctx)
    if found:
        return found
    found = proper(_common_fixed_rows(ctx), ctx)
    if found:
        return found
    found = proper((rng.randrange(1, 1 << dim)
                    for _ in range(min(trials, 128))), ctx)
    if found:
        return found

    t_ctx = ModuleContext(
        dim, [_transpose_rows(rows, dim) for rows in ctx.actions])
    for theta in _algebra_elements(ctx.actions, dim, rng, count=60):
        for context, dualize in ((ctx, False), (t_ctx, True)):
            rows = theta if not dualize else _transpose_rows(theta, dim)
            ker = _left_null_rows(rows, dim)
            if not 0 < ker.dim < dim:
                continue
            cands = (v for v in ker.enumerate_vectors() if v) \
                if ker.dim <= 6 else ker.rows
            found = proper(cands, context)
            if found is None:
                continue
            if not dualize:
                return found
            ann = kernel(BitMatrix(dim, found.space.rows))
            return Submodule(ctx, ann)
    return None


def composition_factor_contexts(ctx: ModuleContext, seed: int = 0,
                                trials: int = 1000) -> List[ModuleContext]:
    """Chop into factors by repeated spinning; single-vector spins only.

    Vectors are tried basis-first then seeded-random, so the outcome is
    deterministic for a given seed.  A factor none of whose tried vectors
    generates a proper submodule is reported irreducible; for dimensions
    above the exhaustive range this is a sampled claim.
    """
    rng = random.Random(seed)
    out: List[ModuleContext] = []
    stack = [ctx]
    while stack:
        c = stack.pop()
        if c.dim == 0:
            continue
        sub = _find_proper_submodule(c, rng, trials)
        if sub is None:
            out.append(c)
        else:
            stack.append(sub_context(c, sub))
            stack.append(quotient_context(c, sub))
    return out


def composition_dims(obj, seed: int = 0, trials: int = 1000) -> Tuple[int, ...]:
    """Multiset (sorted tuple) of composition factor dimensions."""
    if isinstance(obj, Submodule):
        if obj.dim == 0:
            return ()
        ctx = sub_context(obj.ctx, obj)
    else:
        ctx = obj
    factors = composition_factor_contexts(ctx, seed=seed, trials=trials)
    return tuple(sorted(f.dim for f in factors))


def is_irreducible_exhaustive(ctx: ModuleContext) -> bool:
    """Every nonzero vector spins to the whole module (dims <= 14 only)."""
    if ctx.dim == 0:
        return False
    if ctx.dim > 14:
        raise ValueError("exhaustive check limited to dimension 14")
    return all(
        spin(ctx, [v]).dim == ctx.dim for v in range(1, 1 << ctx.dim)
    )


def is_irreducible_sampled(ctx: ModuleContext, seed: int = 0,
                           trials: int = 1000) -> bool:
    """Sampled stand-in for the exhaustive check at larger dimensions."""
    if ctx.dim == 0:
        return False
    rng = random.Random(seed)
    for i in range(ctx.dim):
        if spin(ctx, [1 << i]).dim != ctx.dim:
            return False
    for _ in range(trials):
        if spin(ctx, [rng.randrange(1, 1 << ctx.dim)]).dim != ctx.dim:
            return False
    return True


# -- generator lists ---------------------------------------------------------


def parse_generator_file(text: str) -> Dict[str, List[Polynomial]]:
    """Parse named generator sections.

    A section starts with "NAME:"; each following line is either a
    polynomial in the usual text form or "family X", which expands to
    the individual monomials of that family.
    """
    sections: Dict[str, List[Polynomial]] = {}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.endswith(":"):
            current = line[:-1].strip()
            if not current:
                raise ValueError(f"line {lineno}: empty section name")
            sections[current] = []
            continue
        if current is None:
            raise ValueError(f"line {lineno}: generator before any section")
        if line.startswith("family"):
            letter = line[len("family"):].strip()
            if letter not in FAMILIES:
                raise ValueError(f"line {lineno}: unknown family {letter!r}")
            sections[current].extend(
                Polynomial.monomial(m) for m in FAMILIES[letter]
            )
        else:
            try:
                sections[current].append(parse_polynomial(line))
            except ValueError as e:
                raise ValueError(f"line {lineno}: {e}") from None
    return sections


def builtin_generator_lists() -> Dict[str, List[Polynomial]]:
    text = (resources.files("hitwork") / "data" /
            "submodule_generators.txt").read_text()
    return parse_generator_file(text)


# -- lattice verification ----------------------------------------------------


class LatticeReport:
    """Nodes, covering edges and structural checks of a submodule lattice."""

    __slots__ = ("nodes", "edges", "checks", "failures", "composition")

    def __init__(self, nodes, edges, checks, failures, composition):
        self.nodes = nodes          # name -> Submodule
        self.edges = edges          # (upper, lower, label, quotient_dim)
        self.checks = checks        # description -> bool
        self.failures = failures    # human-readable mismatch lines
        self.composition = composition

    @property
    def ok(self) -> bool:
        return not self.failures

    def node_dims(self) -> Dict[str, int]:
        return {name: sub.dim for name, sub in self.nodes.items()}


def _expected_dim(name: str) -> int:
    return int(name.rstrip("'"))


def verify_figure1(ctx: ModuleContext,
                   generator_lists: Optional[Dict[str, List[Polynomial]]] = None,
                   seed: int = 0, trials: int = 1000) -> LatticeReport:
    """Rebuild the named degree-8 lattice and check it edge by edge."""
    if ctx.qb is None:
        raise ValueError("context carries no quotient basis")
    if generator_lists is None:
        generator_lists = builtin_generator_lists()
    failures: List[str] = []

    nodes: Dict[str, Submodule] = {}
    nodes["0"] = Submodule(ctx, Subspace.zero(ctx.dim))
    nodes["55"] = Submodule(ctx, Subspace.full(ctx.dim))
    for name, polys in generator_lists.items():
        nodes[name] = spin_polynomials(ctx, polys)
    nodes = {name: nodes[name] for name in FIGURE_NODES}

    for name, sub in nodes.items():
        want = _expected_dim(name)
        if sub.dim != want:
            failures.append(f"node {name}: dim {sub.dim}, expected {want}")

    edges = []
    for upper, lower, label in FIGURE_EDGES:
        up, lo = nodes[upper], nodes[lower]
        qdim = up.dim - lo.dim
        edges.append((upper, lower, label, qdim))
        if not up.space.contains_subspace(lo.space):
            failures.append(f"edge {upper} -- {lower}: not an inclusion")
        if qdim != EDGE_LABEL_DIMS[label]:
            failures.append(
                f"edge {upper} -- {lower}: quotient dim {qdim}, "
                f"expected {EDGE_LABEL_DIMS[label]} ({label})"
            )

    def direct_sum(a: str, b: str, meet: str, join: str) -> bool:
        inter = nodes[a].space.intersect(nodes[b].space)
        total = nodes[a].space.sum(nodes[b].space)
        return inter == nodes[meet].space and total == nodes[join].space

    checks = {
        "24 is the direct sum of 4 and 20":
            direct_sum("4", "20", "0", "24"),
        "intersection of 30' and 35 is 24":
            nodes["30'"].space.intersect(nodes["35"].space)
            == nodes["24"].space,
        "55/24 splits as 30'/24 plus 49/24":
            direct_sum("30'", "49", "24", "55"),
        "31/24 splits as 25/24 plus 30/24":
            direct_sum("25", "30", "24", "31"),
        "49/31 splits as 35/31 plus 45/31":
            direct_sum("35", "45", "31", "49"),
    }
    composition = composition_dims(ctx, seed=seed, trials=trials)
    checks["composition factor dims are "
           + str(COMPOSITION_DIMS_55)] = composition == COMPOSITION_DIMS_55
    for desc, ok in checks.items():
        if not ok:
            failures.append(f"check failed: {desc}")

    return LatticeReport(nodes, tuple(edges), checks, failures, composition)


def lattice_to_dot(report: LatticeReport) -> str:
    """Deterministic graph-description text of a lattice report."""
    lines = ["graph submodule_lattice {"]
    ordered = sorted(report.nodes.items(),
                     key=lambda kv: (-kv[1].dim, kv[0]))
    for name, sub in ordered:
        lines.append(f'  "{name}" [label="{name} ({sub.dim})"];')
    for upper, lower, label, qdim in report.edges:
        lines.append(f'  "{upper}" -- "{lower}" [label="{qdim}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
