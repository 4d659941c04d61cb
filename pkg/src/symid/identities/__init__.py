"""Identity checks, the derivation engine and the grid runner."""

from symid.identities.catalog import (
    CATALOG,
    IDENTITY_IDS,
    check_eq12,
    check_eq14,
    check_eq16,
    check_eq17,
    check_eq19,
    check_eq25,
    check_eq26,
    check_eq27,
    check_eq28,
    check_eq29,
    check_series_relation_eq11,
    check_triple,
    check_two_var_relation_eq24,
    run_instance,
)
from symid.identities.derive import (
    DerivedIdentity,
    PartialFractionDecomp,
    brute_force_oracle,
    derive_identity,
    eq25_coefficients,
    partial_fractions,
)
from symid.identities.report import IdentityInstance, IdentityReport

__all__ = [
    "CATALOG",
    "IDENTITY_IDS",
    "DerivedIdentity",
    "IdentityInstance",
    "IdentityReport",
    "PartialFractionDecomp",
    "brute_force_oracle",
    "check_eq12",
    "check_eq14",
    "check_eq16",
    "check_eq17",
    "check_eq19",
    "check_eq25",
    "check_eq26",
    "check_eq27",
    "check_eq28",
    "check_eq29",
    "check_series_relation_eq11",
    "check_triple",
    "check_two_var_relation_eq24",
    "derive_identity",
    "eq25_coefficients",
    "partial_fractions",
    "run_instance",
]
