"""Builtin algebras with their K-data and expected L-groups."""

from .entries import (
    ALIASES,
    DEFAULT_RUN,
    OUT_OF_SCOPE,
    PARAMETERS,
    CatalogEntry,
    CatalogError,
    ForcedData,
    builtin,
    names,
)
from .expectations import Expectation, ProvenanceError, load_expectations, parse_group
from .runner import CheckResult, EntryReport, VerifyReport, verify, verify_entry

__all__ = [
    "ALIASES",
    "DEFAULT_RUN",
    "OUT_OF_SCOPE",
    "PARAMETERS",
    "CatalogEntry",
    "CatalogError",
    "CheckResult",
    "EntryReport",
    "Expectation",
    "ForcedData",
    "ProvenanceError",
    "VerifyReport",
    "builtin",
    "load_expectations",
    "names",
    "parse_group",
    "verify",
    "verify_entry",
]
