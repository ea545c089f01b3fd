"""Slide-based reconfiguration of labeled nearly perfect matchings
on triangular grid graphs."""

__version__ = "0.1.0"
