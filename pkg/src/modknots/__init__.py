"""Modular knot enumeration and the Rademacher symbol, three independent ways.

Primitive hyperbolic conjugacy classes of PSL(2,Z) are the closed geodesics
of the modular surface; each one is a knot in the complement of a trefoil.
This package enumerates them exactly by trace, computes the Dedekind and
Rademacher symbols through a Dedekind-sum closed form, through the L/R word
statistic, and through the winding of the discriminant form along the
geodesic orbit, and checks the equidistribution laws the symbols obey.
"""

from .core import (
    Mat2,
    SpectralData,
    NotHyperbolicError,
    word_to_matrix,
    canonical_necklace,
    spectral,
    conjugate,
)
from .enumeration import (
    ClassRecord,
    EnumerationParams,
    enumerate_classes,
    brute_force_classes,
    classes_by_length,
    are_conjugate_oracle,
)
from .symbols import (
    dedekind_sum,
    phi,
    psi,
    psi_from_word,
    delta_q,
    phi_numeric_oracle,
)
from .stats import (
    DensityReport,
    CauchyReport,
    density_mod_m,
    cauchy_cdf_compare,
    convergence_trend,
)
from .winding import axis_frame, orbit_samples, winding_psi

__version__ = "0.1.0"

__all__ = [
    "Mat2",
    "SpectralData",
    "NotHyperbolicError",
    "word_to_matrix",
    "canonical_necklace",
    "spectral",
    "conjugate",
    "ClassRecord",
    "EnumerationParams",
    "enumerate_classes",
    "brute_force_classes",
    "classes_by_length",
    "are_conjugate_oracle",
    "dedekind_sum",
    "phi",
    "psi",
    "psi_from_word",
    "delta_q",
    "phi_numeric_oracle",
    "DensityReport",
    "CauchyReport",
    "density_mod_m",
    "cauchy_cdf_compare",
    "convergence_trend",
    "axis_frame",
    "orbit_samples",
    "winding_psi",
    "__version__",
]
