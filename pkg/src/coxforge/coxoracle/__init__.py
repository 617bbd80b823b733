"""The hypersurface model and the cohomological dimension oracle."""

from .dims import (KernelElement, band_pattern, build_A, check_kernel, ci_hilbert, cox_dim,
                   element_vector, h0_dim, h1_dim, kernel_basis, kernel_dim, n_dim)
from .instance import (HypersurfaceInstance, IndexSequence, InstanceParseError, InvalidInstanceError,
                       detect_index_sequence, format_instance, parse_instance, random_form, random_instance)
from .regularity import DegeneracyLocus, RegularityReport, is_regular_sequence, lift_to_rationals

__all__ = [
    "DegeneracyLocus", "HypersurfaceInstance", "IndexSequence", "InstanceParseError",
    "InvalidInstanceError", "KernelElement", "RegularityReport", "band_pattern", "build_A",
    "check_kernel", "ci_hilbert", "cox_dim", "detect_index_sequence", "element_vector",
    "format_instance", "h0_dim", "h1_dim", "is_regular_sequence", "kernel_basis", "kernel_dim",
    "lift_to_rationals", "n_dim", "parse_instance", "random_form", "random_instance",
]
