"""Ladder matrices: column-tuple lattices, join-irreducible posets, and
Gorenstein decisions for special fiber rings."""

from ._core import (
    CapExceededError,
    __version__,
    Poset,
    Shape,
    blocks,
    count_lattice,
    diagonal_leading_check,
    enumerate_lattice,
    fiber_dimension,
    fiber_hilbert_direct,
    gaps,
    gorenstein,
    h_vector,
    hibi_relations,
    invariants,
    join_irreducibles,
    join_irreducibles_oracle,
    minor,
    multichain_hilbert,
    normalize,
    parse_shape,
    validate,
)

__all__ = [
    "CapExceededError",
    "Poset",
    "Shape",
    "blocks",
    "count_lattice",
    "diagonal_leading_check",
    "enumerate_lattice",
    "fiber_dimension",
    "fiber_hilbert_direct",
    "gaps",
    "gorenstein",
    "h_vector",
    "hibi_relations",
    "invariants",
    "join_irreducibles",
    "join_irreducibles_oracle",
    "minor",
    "multichain_hilbert",
    "normalize",
    "parse_shape",
    "validate",
]
