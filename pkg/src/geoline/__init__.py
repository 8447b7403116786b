"""Exact classification of invariant geometric structures on geodesic spaces."""

__version__ = "0.1.0"
