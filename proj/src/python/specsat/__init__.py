"""Spectral supersaturation toolkit."""

from ._core import (  # noqa: F401
    Graph,
    PartitionedGraph,
    SpecsatError,
    c_n_F,
    chromatic_number,
    complete_multipartite,
    count_copies,
    count_copies_through_edge,
    covering_number,
    enumerate_family,
    family,
    multipartite_lambda,
    spectral_radius,
    theorem_names,
    turan_sizes,
    verify,
    walk_count,
    zhang_lambda,
)

__version__ = "0.1.0"
