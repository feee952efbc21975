"""Statement registry, tightness checks, exhaustive scans and the annealing hunter."""

from __future__ import annotations

from .registry import ENTRIES, REGISTRY, Arity, Status, TheoremVerdict, check

__all__ = ["ENTRIES", "REGISTRY", "Arity", "Status", "TheoremVerdict", "check"]
