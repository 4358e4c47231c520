"""Exact Dedekind-Rademacher sums, Brieskorn sphere invariants and lattice counts."""
from .brieskorn import BrieskornData, derive, enumerate_tuples, is_pairwise_coprime
from .errors import (
    BadGenerator,
    InternalInconsistency,
    KMError,
    NotCoprime,
    NotInSimplex,
    NotPairwiseCoprime,
    OutOfBox,
    TooFewFibers,
    UnsupportedDimension,
    WrongParity,
)
from .exact import Rational, floor_int, frac, nearest_int, parse_rational, rational, sawtooth, to_str
from .invariants import (
    KMReport,
    casson,
    chi_sw,
    ff_invariant,
    ff_invariant_seifert_form,
    km_rhs_closed_form,
    km_verify,
    signature,
)
from .lattice import (
    LatticeCensus,
    degree_vector,
    interval_census,
    involution,
    mordell_count,
    q_value,
    simplex_count,
)
from .sums import (
    RademacherParams,
    check_identity_ele,
    check_identity_ele0,
    check_identity_ele1,
    dedekind_sum,
    rademacher_sum,
    rademacher_sum_fast,
)

__version__ = "0.1.0"
