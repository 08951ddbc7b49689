"""Exact arithmetic toolkit for ramification, discriminant bounds and small modular representations."""
from __future__ import annotations

__version__ = "0.1.0"
