"""Exact Hilbert series and Laurent data for rings of SL2 invariants."""

__version__ = "0.1.0"

from .repmodel import Representation, parse_rep, weight_system, classify_case
from .series import hilbert_series
from .laurent import gammas, gamma0, gamma1, gamma2, gamma3, a_invariant
