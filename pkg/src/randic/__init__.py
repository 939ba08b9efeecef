"""Randić energy of graphs: spectra, closed forms, bounds and sweeps."""

__version__ = "0.1.0"

from .bounds import BoundEntry, BoundReport, check_all
from .canon import canonical_graph6, is_isomorphic
from .closed_forms import (
    cross_validate,
    double_sun_energy_corrected,
    double_sun_energy_printed,
    double_sun_quartic,
    double_sun_spectrum,
    quartic_pairing,
    sun_energy,
    sun_spectrum,
)
from .families import (
    balanced_double_sun,
    complete,
    cycle,
    double_sun,
    edge_double_subdivision,
    enumerate_connected_graphs,
    enumerate_trees,
    from_family_spec,
    path,
    star,
    starlike,
    sun,
)
from .graph import Bipartition, Graph, GraphFormatError, is_connected, is_tree, is_TB, parse_edgelist, parse_graph6, to_edgelist, to_graph6
from .inertia import InertiaTriple, inertia, locate_eigenvalues, nullity_exact
from .spectra import (
    Spectrum,
    normalized_laplacian_energy,
    nullity,
    randic_energy,
    randic_index_minus1,
    randic_spectrum,
)
from .sweep import SweepResult, sweep_connected, sweep_trees
from .tb import tb_decompose, tb_energy_bound

import types as _types

__all__ = [k for k, v in dict(globals()).items() if not k.startswith("_") and not isinstance(v, _types.ModuleType)]
