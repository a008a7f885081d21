"""Combinatorics of Springer and extended Springer fibers for type A."""

from .inversions import PairSet, i_tilde, inversion_count, pair_count, springer_inversions, springer_pairs
from .partitions import ParseError, Partition, springer_dim
from .poincare import (
    ConsistencyError,
    EquivariantPolynomial,
    IntPolynomial,
    equivariant_poincare,
    extended_cells,
    extended_poincare,
    isotypic_poincare,
    lusztig_stalk_poincare,
    springer_poincare,
)
from .tableaux import RowStrictTableau, enumerate_rst, ijk_decomposition, max_divisor, quotient_tableau, standardize
from .toric import ToricFrame, component_characters, d_star, phi

__version__ = "0.1.0"
