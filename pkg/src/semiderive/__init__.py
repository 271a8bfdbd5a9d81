"""Exact, exhaustive checks of Jordan-type derivations on finite endomorphism semirings."""

from __future__ import annotations

from .chain_core import Endo, SemiringError, format_rle, make_endo, parse_rle
from .jordan import JordanMap, leibniz_scan
from .simplex import SimplexSpec, enumerate_simplex, parse_simplex
from .verifier import ClaimResult, ReportConfig, full_report

__version__ = "0.1.0"

__all__ = [
    "Endo",
    "SemiringError",
    "make_endo",
    "parse_rle",
    "format_rle",
    "SimplexSpec",
    "parse_simplex",
    "enumerate_simplex",
    "JordanMap",
    "leibniz_scan",
    "ClaimResult",
    "ReportConfig",
    "full_report",
]
