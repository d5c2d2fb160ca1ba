"""Packaged ribbon graphs and their surface Tutte polynomials.

Quick start::

    from ribbontutte import PackagedRibbonGraph, fixtures, statesum
    pg = PackagedRibbonGraph.from_plain(fixtures.interlaced())
    print(statesum(pg))
"""

from . import fixtures
from .errors import (
    BudgetExceededError,
    GraphFileError,
    GroupError,
    MalformedMapError,
    NotASubgraphError,
    PartitionError,
    RibbonError,
    UnknownBoundaryError,
    UnknownEdgeError,
    UnmappedVariableError,
)
from .flows import (
    brute_force_p,
    brute_force_q,
    p1,
    p_dc,
    p_incexc,
    p_via_T,
    q1,
    q_dc,
    q_incexc,
    q_via_T,
)
from .groups import GroupSpec, builtin_group, cyclic, dihedral, parse_cayley
from .packaged import Packaging, PackagedRibbonGraph
from .partition import Partition
from .poly import IntPoly, LaurentPoly, Var
from .ribbon import BoundaryComponent, CountSummary, RibbonMap
from .specializations import (
    classical_tutte,
    surface_tutte,
    surface_tutte_direct,
    tps_direct,
    tps_prefactor,
    tps_via_T,
)
from .tutte import (
    GenusTerm,
    check_duality,
    dc,
    dc_leaves,
    edgeless_value,
    statesum,
    universal_closed,
    universal_recursive,
)

__version__ = "0.1.0"
