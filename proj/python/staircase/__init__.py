"""Exact invariants of monomial ideals.

Thin wrapper over the compiled extension; multiplicities and volumes come
back as ``fractions.Fraction``.
"""

from ._core import (
    InternalError,
    InvalidRing,
    MalformedInput,
    MonomialIdeal,
    PreconditionError,
    RingSpec,
    colength,
    colon,
    colon_quotient_length,
    complement_volume,
    contains,
    default_var_names,
    experiment_names,
    format_ideal,
    frobenius_power,
    hk_multiplicity,
    hk_sequence,
    hs_estimate,
    hs_multiplicity,
    hs_sequence,
    ideal_leq,
    ideal_power,
    ideal_product,
    ideal_sum,
    integral_closure,
    intersect,
    is_integrally_closed,
    is_m_primary,
    make_ideal,
    make_ring,
    min_gens,
    ord,
    parse_ideal_file,
    project,
    run_experiment,
    saturate_variables,
    socle_length,
)

__all__ = [
    "InternalError",
    "InvalidRing",
    "MalformedInput",
    "MonomialIdeal",
    "PreconditionError",
    "RingSpec",
    "colength",
    "colon",
    "colon_quotient_length",
    "complement_volume",
    "contains",
    "default_var_names",
    "experiment_names",
    "format_ideal",
    "frobenius_power",
    "hk_multiplicity",
    "hk_sequence",
    "hs_estimate",
    "hs_multiplicity",
    "hs_sequence",
    "ideal_leq",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "integral_closure",
    "intersect",
    "is_integrally_closed",
    "is_m_primary",
    "make_ideal",
    "make_ring",
    "min_gens",
    "ord",
    "parse_ideal_file",
    "project",
    "run_experiment",
    "saturate_variables",
    "socle_length",
]
