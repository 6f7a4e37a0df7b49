"""Exact torsion-point bounds for complete intersections in abelian
varieties, plus the series, combinatorics, and Witt-vector machinery the
bounds are verified against."""

from .bounds import (
    BoundInput,
    BoundReport,
    PexTerm,
    SlopeChainReport,
    deg_abelian_bound,
    deg_pex,
    pex_closed_form_general,
    pex_closed_form_uniform,
    pex_terms,
    threshold_debarre,
    threshold_lemma_p,
    torsion_bound,
    verify_slope_chain,
)
from .chern import (
    chern_normal,
    chern_tangent,
    cotangent_chern,
    deg_cotangent,
    frobenius_scale,
    segre_cotangent,
    top_integral,
)
from .combinatorics import (
    CompositionMultiset,
    binomial_product,
    enumerate_compositions,
    inverse_series_coeff,
    signed_multinomial,
    sym_complete,
    sym_elementary,
    w_coeff,
    z_coeff,
)
from .errors import CapacityError, InternalConsistencyError, ValidationError
from .primes import DETERMINISTIC_LIMIT, is_prime, next_prime
from .series import CycleClass, TruncatedSeries
from .witt import FiniteField, FqElement, WittPair, WittRing, carry_coefficients

__version__ = "0.1.0"

__all__ = [
    "BoundInput",
    "BoundReport",
    "CapacityError",
    "CompositionMultiset",
    "CycleClass",
    "DETERMINISTIC_LIMIT",
    "FiniteField",
    "FqElement",
    "InternalConsistencyError",
    "PexTerm",
    "SlopeChainReport",
    "TruncatedSeries",
    "ValidationError",
    "WittPair",
    "WittRing",
    "binomial_product",
    "carry_coefficients",
    "chern_normal",
    "chern_tangent",
    "cotangent_chern",
    "deg_abelian_bound",
    "deg_cotangent",
    "deg_pex",
    "enumerate_compositions",
    "frobenius_scale",
    "inverse_series_coeff",
    "is_prime",
    "next_prime",
    "pex_closed_form_general",
    "pex_closed_form_uniform",
    "pex_terms",
    "segre_cotangent",
    "signed_multinomial",
    "sym_complete",
    "sym_elementary",
    "threshold_debarre",
    "threshold_lemma_p",
    "top_integral",
    "torsion_bound",
    "verify_slope_chain",
    "w_coeff",
    "z_coeff",
]
