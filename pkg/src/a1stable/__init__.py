"""Graded modules over A(1) and E(1) and their stable invariants."""

from __future__ import annotations

__version__ = "0.1.0"

from .algebra import A1, E1, get_algebra
from .catalog import CatalogError, embedded_p, laurent_box, laurent_window, make, poly_tensor, ses_main
from .functors import (ext_dim, free_module, inverse_loops, localize, loops, minimal_cover,
                       minimal_resolution, regular_module, tensor, trivial_module)
from .gf2 import BitMatrix, BitVector, kernel_basis, rank, solve
from .hilbert import TruncatedSeries, free_part_series, p_series, series_of
from .margolis import (RefusalError, UnclassifiableError, induces_stable_iso, is_stably_free,
                       margolis_homology, reduced, reduced_part, stable_class_equal)
from .module import GradedModule, ModuleMap, TrustError, direct_sum, dual, restrict_to_e1, suspend
from .picard import (InvariantError, PicClass, classify_local, d_invariant, is_idempotent,
                     pic_localization_matrix, t1_invariant)
from .serialize import dumps, load, loads, save, to_ascii, to_dot

__all__ = [
    "A1", "E1", "get_algebra", "CatalogError", "embedded_p", "laurent_box", "laurent_window", "make",
    "poly_tensor", "ses_main", "ext_dim", "free_module", "inverse_loops", "localize", "loops",
    "minimal_cover", "minimal_resolution", "regular_module", "tensor", "trivial_module", "BitMatrix",
    "BitVector", "kernel_basis", "rank", "solve", "TruncatedSeries", "free_part_series", "p_series", "series_of",
    "RefusalError", "UnclassifiableError", "induces_stable_iso", "is_stably_free", "margolis_homology",
    "reduced", "reduced_part", "stable_class_equal", "GradedModule", "ModuleMap", "TrustError",
    "direct_sum", "dual", "restrict_to_e1", "suspend", "InvariantError", "PicClass", "classify_local",
    "d_invariant", "is_idempotent", "pic_localization_matrix", "t1_invariant", "dumps", "load", "loads",
    "save", "to_ascii", "to_dot",
]
