"""Isoparametric data from Clifford systems, plus the arithmetic and
fiber-invariant tables that constrain dual submanifolds in homology spheres."""

from isopar.arith import delta, delta_divides, radon_hurwitz
from isopar.classify import (
    DimensionTriple,
    StolzVerdict,
    Verdict,
    enumerate_fkm,
    munzner_g,
    stolz,
    theorem_a,
)
from isopar.clifford import CliffordSystem, build_clifford_system, verify_clifford_system
from isopar.fkm import FkmPolynomial, verify_cartan_munzner
from isopar.geometry import curvature_report, principal_curvatures, sample_level_set, shape_operator
from isopar.homotopy import FiberConfig, fiber_homology, fundamental_group, poincare_series, rational_type

__version__ = "0.1.0"

__all__ = [
    "CliffordSystem",
    "DimensionTriple",
    "FiberConfig",
    "FkmPolynomial",
    "StolzVerdict",
    "Verdict",
    "build_clifford_system",
    "curvature_report",
    "delta",
    "delta_divides",
    "enumerate_fkm",
    "fiber_homology",
    "fundamental_group",
    "munzner_g",
    "poincare_series",
    "principal_curvatures",
    "radon_hurwitz",
    "rational_type",
    "sample_level_set",
    "shape_operator",
    "stolz",
    "theorem_a",
    "verify_cartan_munzner",
    "verify_clifford_system",
]
