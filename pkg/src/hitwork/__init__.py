"""Exact GF(2) workbench for hit-problem quotients of polynomial algebras.

Core layers: f2linalg (bit-packed linear algebra), poly (monomials and
Steenrod squares), quotient (hit subspaces and canonical quotient bases),
glaction (linear group actions and invariants), kameko (halving and
doubling maps between degrees), modlattice (submodule spinning and the
degree-8 lattice), cache and cli.
"""

__version__ = "0.1.0"

from .f2linalg import BitMatrix, BitVector, Subspace, kernel, rref
from .poly import (
    Monomial,
    Polynomial,
    SteenrodOp,
    apply_chi,
    apply_op,
    binom_mod2,
    chi,
    is_spike,
    parse_monomial,
    parse_polynomial,
    sq,
    substitute,
)
from .quotient import (
    DegreeContext,
    HitWitness,
    QuotientBasis,
    degree_context,
    degree_monomials,
    hit_space,
    is_hit,
    quotient_basis,
    reduce,
    verify_basis,
)
from .glaction import (
    GLElement,
    InducedAction,
    family_orbit,
    gl_generators,
    induced_matrix,
    invariants,
)
from .kameko import (
    KamekoChain,
    chain,
    down_map_on_quotient,
    down_monomial,
    even_hypothesis,
    even_image_property,
    up_monomial,
)
from .modlattice import (
    LatticeReport,
    ModuleContext,
    Submodule,
    composition_dims,
    lattice_to_dot,
    spin,
    verify_figure1,
)

__all__ = [
    "__version__",
    "BitMatrix", "BitVector", "Subspace", "kernel", "rref",
    "Monomial", "Polynomial", "SteenrodOp", "apply_chi", "apply_op",
    "binom_mod2", "chi", "is_spike", "parse_monomial", "parse_polynomial",
    "sq", "substitute",
    "DegreeContext", "HitWitness", "QuotientBasis", "degree_context",
    "degree_monomials", "hit_space", "is_hit", "quotient_basis", "reduce",
    "verify_basis",
    "GLElement", "InducedAction", "family_orbit", "gl_generators",
    "induced_matrix", "invariants",
    "KamekoChain", "chain", "down_map_on_quotient", "down_monomial",
    "even_hypothesis", "even_image_property", "up_monomial",
    "LatticeReport", "ModuleContext", "Submodule", "composition_dims",
    "lattice_to_dot", "spin", "verify_figure1",
]
