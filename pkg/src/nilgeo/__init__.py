"""Exact-arithmetic toolkit: root systems, highest-weight modules, metric
2-step nilpotent Lie algebras built from a compact module, and closed-geodesic
certification against Chevalley lattices."""

__version__ = "0.1.0"
