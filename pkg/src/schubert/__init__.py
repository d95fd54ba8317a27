"""Schubert determinantal ideals: generators, Groebner bases, classification and regularity."""

from .errors import PartsError, ResourceCapExceeded
from .permutations import (
    Permutation, all_permutations, contains_pattern, enumerate_avoiders,
    essential_set, is_binomial_pattern, is_vexillary, max_essential_rank,
    parse_permutation, parts, rank_table, rothe_diagram, schroder,
)
from .polynomials import (
    Monomial, Polynomial, TermOrder, antidiagonal_order,
    antidiagonal_transpose_order, order_by_name,
)
from .groebner import GroebnerBasis, buchberger, divide, is_groebner, reduce_basis
from .ideals import (
    MinorSpec, SchubertIdeal, elusive_basis, elusive_minors, extremal_family,
    fulton_generators, gao_yong_is_reduced, is_binomial_ideal,
    reduced_schubert_basis, schubert_ideal,
)
from .regularity import (
    ADSValue, BipartiteGraph, Partition, ads_regularity, canonical_antidiagonal,
    partition_graph, recession_connectivity, recession_witness,
    regularity_decomposition, rrw_regularity, thicken,
)
from .betti import BettiTable, betti_oracle

__version__ = "0.1.0"
