"""Exact intersection pairings on quotients by torus, U(1) and SU(2) actions."""

from .errors import (
    ContractViolation,
    CriticalValueError,
    DegreeMismatch,
    InvalidChamber,
    NonExpandablePole,
    PerturbationRequired,
    QPairingError,
    StrictlySemistableError,
    ValidationError,
)
from .exactalg import GaussianRational, LinearForm, LocalizationTerm, MultiPoly, TruncatedSeries
from .expr import parse_expression
from .ihring import ih_pairing_matrix, ih_pairing_scalar, semistable_ring, vm_basis, weakly_balanced_check
from .models import (
    ActionModel,
    FixedComponent,
    builtin_model,
    dump_model,
    load_model,
    model_circle_pn,
    model_su2_p1n,
    model_su2_pn,
)
from .pairing import (
    martin_factor,
    pair_abelianized,
    pair_ih,
    pair_partial_desing,
    pair_regular,
    wall_crossing_jump,
)
from .residue import Chamber, Perturbation, jk_residue, residue_1d, residue_1d_plus
from .stratify import StratificationSpec, desing_series, ip_series, semistable_series
from .witten import SqrtEpsPolynomial, gaussian_halfline_moment, witten_i0

__version__ = "0.1.0"

__all__ = [
    "ActionModel", "Chamber", "ContractViolation", "CriticalValueError", "DegreeMismatch",
    "FixedComponent", "GaussianRational", "InvalidChamber", "LinearForm", "LocalizationTerm",
    "MultiPoly", "NonExpandablePole", "Perturbation", "PerturbationRequired", "QPairingError",
    "SqrtEpsPolynomial", "StratificationSpec", "StrictlySemistableError", "TruncatedSeries",
    "ValidationError", "builtin_model", "desing_series", "dump_model", "gaussian_halfline_moment",
    "ih_pairing_matrix", "ih_pairing_scalar", "ip_series", "jk_residue", "load_model",
    "martin_factor", "model_circle_pn", "model_su2_p1n", "model_su2_pn", "pair_abelianized",
    "pair_ih", "pair_partial_desing", "pair_regular", "parse_expression", "residue_1d",
    "residue_1d_plus", "semistable_ring", "semistable_series", "vm_basis", "wall_crossing_jump",
    "weakly_balanced_check", "witten_i0",
]
