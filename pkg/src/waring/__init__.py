"""Exact symmetric-function engine for Waring-type identities on X/(1-tX)."""

from .arith import BiSeries, MultiPoly, Rational, ZPoly, binom_int, binom_z, rising_factorial, series_geom_inverse, series_mul
from .identities import *  # noqa: F403
from .partitions import *  # noqa: F403
from .symfunc import *  # noqa: F403
from . import identities as _identities, partitions as _partitions, symfunc as _symfunc

__all__ = [
    "BiSeries", "MultiPoly", "Rational", "ZPoly",
    "binom_int", "binom_z", "rising_factorial", "series_geom_inverse", "series_mul",
    *_partitions.__all__, *_symfunc.__all__, *_identities.__all__,
]

__version__ = "0.1.0"
