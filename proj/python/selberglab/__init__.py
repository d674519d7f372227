"""Invariants, cross-verification, and classification of degree-2,
conductor-1 functional equations."""

from ._core import (
    chi,
    classify,
    delta_tau,
    mittag_leffler,
    run,
    serialize,
    structural,
)

__all__ = [
    "chi",
    "classify",
    "delta_tau",
    "mittag_leffler",
    "run",
    "serialize",
    "structural",
]
