"""Candidate presentations of R(Z) and their comparison with the oracle."""

from .compare import (ComparisonReport, DimRecord, ProbeReport, Window, compare_dims, compare_with_oracle,
                      converse_probe, instance_echo)
from .model import (Presentation, PresentationError, build_main_presentation, free_algebra_dim,
                    hypersurface_equation, quotient_dim, quotient_dim_dense)
from .zplus import ZPlusReport, build_zplus_model, verify_zplus

__all__ = [
    "ComparisonReport", "DimRecord", "Presentation", "PresentationError", "ProbeReport", "Window",
    "ZPlusReport", "build_main_presentation", "build_zplus_model", "compare_dims", "compare_with_oracle",
    "converse_probe", "free_algebra_dim", "hypersurface_equation", "instance_echo", "quotient_dim",
    "quotient_dim_dense", "verify_zplus",
]
