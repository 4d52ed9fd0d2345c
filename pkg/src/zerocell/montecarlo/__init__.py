"""Simulation oracles validating the exact-formula modules.

Random cones with hit-or-miss solid-angle estimation, exact sequential-clip
samples of low-dimensional zero cells, and exact decreasing-radius samples
of Poisson polyhedra.  Every sample is a deterministic function of an
:class:`RngSeed`, and replications across derived substreams merge in
replication order, so reports reproduce bit for bit.
"""

from .base import (RngSeed, SimulationReport, SolidAngleEstimate,
                   derive_substream, generator, sample_halfsphere,
                   sample_sphere)
from .cones import (cone_contains, estimate_expected_angle,
                    estimate_solid_angle, nnls)
from .cells import (HalfspaceCell, estimate_zero_cell_fvector,
                    simulate_zero_cell)
from .hulls import estimate_polyhedron_fvector, simulate_poisson_polyhedron

__all__ = [
    "RngSeed",
    "SimulationReport",
    "SolidAngleEstimate",
    "HalfspaceCell",
    "cone_contains",
    "derive_substream",
    "estimate_expected_angle",
    "estimate_polyhedron_fvector",
    "estimate_solid_angle",
    "estimate_zero_cell_fvector",
    "generator",
    "nnls",
    "sample_halfsphere",
    "sample_sphere",
    "simulate_poisson_polyhedron",
    "simulate_zero_cell",
]
