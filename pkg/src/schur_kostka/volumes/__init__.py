"""Schur volume functions, their walls and cells, and the relations to multiplicities."""

from .b2 import b2_determination, b2_lines, b2_model, in_octagon, vol_b2, vol_b2_ray
from .cells import CellArrangement, b2_cell_signatures, b2_cell_types, cells_crosssection
from .heckman import heckman_b2, heckman_su
from .relations import RelationResult, b2_prefactor, i_mult_relation, normalization, pdf, pdf_grid, shifted_volume
from .su import in_permutahedron, su3_piece, su4_determination, vol_su, vol_su2, vol_su3, vol_su4
from .walls import JumpRecord, ProbeResult, WallSpec, h_sign, jump_su4, observed_jump_su4, su4_walls, wall_smoothness_probe

__all__ = [
    "CellArrangement",
    "JumpRecord",
    "ProbeResult",
    "RelationResult",
    "WallSpec",
    "b2_cell_signatures",
    "b2_cell_types",
    "b2_determination",
    "b2_lines",
    "b2_model",
    "b2_prefactor",
    "cells_crosssection",
    "h_sign",
    "heckman_b2",
    "heckman_su",
    "i_mult_relation",
    "in_octagon",
    "in_permutahedron",
    "jump_su4",
    "normalization",
    "observed_jump_su4",
    "pdf",
    "pdf_grid",
    "shifted_volume",
    "su3_piece",
    "su4_determination",
    "su4_walls",
    "vol_b2",
    "vol_b2_ray",
    "vol_su",
    "vol_su2",
    "vol_su3",
    "vol_su4",
    "wall_smoothness_probe",
]
