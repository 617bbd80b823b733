"""Operator algebra on the kernels of the band matrices."""

from .verify import (Battery, PropertyCase, PsiRecord, VerificationReport, psi_span, run_operator_suite,
                     verify_psi, xw_monomials)
from .operators import (ConsistencyFault, OperatorContext, OperatorDomainError, UMonomial, add, neg, op_w,
                        op_x, op_z, scale)

__all__ = ["ConsistencyFault", "OperatorContext", "OperatorDomainError", "UMonomial", "add", "neg",
           "op_w", "op_x", "op_z", "scale", "Battery", "PropertyCase", "PsiRecord", "VerificationReport",
           "psi_span", "run_operator_suite", "verify_psi", "xw_monomials"]
