"""Exact computations for the generalized Khovanov arc algebras K_m^n."""

from .algebra import ArcAlgebra, get_algebra
from .diagrams import enumerate_weights, weight_length
from .kl import kl_poly
from .laurent import LaurentPoly

__version__ = "0.1.0"


def clear_caches():
    """Forget every memoized algebra, resolution, splitting and oracle table."""
    from . import algebra, dg, resolver, shelton

    algebra._cache.clear()
    resolver._res_cache.clear()
    dg._splittings.clear()
    shelton._default.memo.clear()
