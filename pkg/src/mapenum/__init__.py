"""Exact enumeration of labeled maps on oriented and unoriented surfaces."""

__version__ = "0.1.0"

from mapenum.errors import (  # noqa: E402
    CountOverflowError,
    MapEnumError,
    OddDartCountError,
    ProfileError,
    WorkloadError,
)
from mapenum.histograms import ChiHistogram, FaceHistogram, GenusHistogram  # noqa: E402
from mapenum.profile import DegreeProfile  # noqa: E402
from mapenum.perm import Matching, Permutation, compose, conjugate, matchings  # noqa: E402
from mapenum.oriented import (  # noqa: E402
    build_sigma,
    classify,
    enumerate_oriented,
    enumerate_oriented_moments,
)
from mapenum.unoriented import (  # noqa: E402
    build_doubled,
    classify_unoriented,
    enumerate_unoriented,
    enumerate_unoriented_moments,
    lift,
    validate_triple,
)
from mapenum.oracles import goulden_jackson, harer_zagier  # noqa: E402
from mapenum.wick import MomentSpec, goe_moment, gue_moment  # noqa: E402

__all__ = [
    "ChiHistogram",
    "CountOverflowError",
    "DegreeProfile",
    "FaceHistogram",
    "GenusHistogram",
    "MapEnumError",
    "Matching",
    "MomentSpec",
    "OddDartCountError",
    "Permutation",
    "ProfileError",
    "WorkloadError",
    "build_doubled",
    "build_sigma",
    "classify",
    "classify_unoriented",
    "compose",
    "conjugate",
    "enumerate_oriented",
    "enumerate_oriented_moments",
    "enumerate_unoriented",
    "enumerate_unoriented_moments",
    "goe_moment",
    "goulden_jackson",
    "gue_moment",
    "harer_zagier",
    "lift",
    "matchings",
    "validate_triple",
]
