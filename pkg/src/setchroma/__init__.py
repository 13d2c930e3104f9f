"""Exact counts of set colorings of graphs and of the balls-into-urns problem."""

from .chromafn import closed_form_special, partitioned_set_chromatic, set_chromatic, weighted_chromatic
from .combinatorics import binomial, franel, gaussian_binomial
from .gaingraph import (
    PermutationGainGraph,
    count_proper_set_colorings,
    deletion_contraction_probe,
    sk_expansion,
)
from .genfunc import (
    darroch_mode_estimate,
    is_log_concave,
    product_linear_factors,
    urn_counts,
    weighted_injective_counts,
)
from .graph import (
    BondLattice,
    SimpleGraph,
    connected_partitions,
    contract_edge,
    delete_edge,
    mobius_from_bottom,
    parse_graph,
)
from .limits import CapacityError

__version__ = "0.1.0"
