"""Annihilating-ideal graphs of finite commutative principal rings and their metric dimension."""
from .ag_graph import AGGraph, adjacent, build, distance_bfs, distance_closed_form
from .constructions import ideal_I, ideal_L, explicit_resolving_set
from .errors import AnnigraphError, DomainError, GraphSizeError, InputError, ParseError
from .formulas import Case, DimBounds, dim_bounds, epsilon_general
from .metdim import (
    ResolvingSetCertificate,
    brute_force_metric_dimension,
    exact_metric_dimension,
    is_resolving,
    representation,
    twin_partition,
)
from .ring_model import (
    IdealVector,
    RingSpec,
    annihilator,
    enumerate_vertices,
    is_vertex,
    parse_spec,
    spec_from_modulus,
)

__version__ = "0.1.0"
