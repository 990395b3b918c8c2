"""Numerical toolkit for the Booth-lemniscate function classes BS(alpha)
and BK(alpha): coefficient bounds, logarithmic coefficients, radii of
convexity, and pre-Schwarzian norms, with falsification sweeps over
Schwarz-map families."""

__version__ = "0.1.0"

from .series import TruncatedSeries
from .domain import AlphaParam, BoothDomain, f_alpha
from .schwarz import SchwarzMap, monomial, blaschke, sample
from .members import ClassMember, from_schwarz_bs, from_schwarz_bk, extremal_fn
from .radius import radius_bs, radius_bk
from .norm import norm_estimate

__all__ = [
    "__version__",
    "TruncatedSeries",
    "AlphaParam",
    "BoothDomain",
    "f_alpha",
    "SchwarzMap",
    "monomial",
    "blaschke",
    "sample",
    "ClassMember",
    "from_schwarz_bs",
    "from_schwarz_bk",
    "extremal_fn",
    "radius_bs",
    "radius_bk",
    "norm_estimate",
]
