"""Exact topological recursion for ordinary and bipartite map enumeration."""
from .coeff_ring import WeightConfig, WeightSeries
from .curve import SpectralCurveData, build_curve, check_curve_relations
from .extract import CountTable, counts, counts_cylinder, counts_disk, counts_stable
from .tr_engine import DEFAULT_SIGN, OmegaForm, TopologicalRecursion, galois_check
from .zfun import INF, LaurentLocal, ZRational

__all__ = [
    "WeightConfig", "WeightSeries", "SpectralCurveData", "build_curve", "check_curve_relations",
    "CountTable", "counts", "counts_cylinder", "counts_disk", "counts_stable", "DEFAULT_SIGN",
    "OmegaForm", "TopologicalRecursion", "galois_check", "INF", "LaurentLocal", "ZRational",
]
