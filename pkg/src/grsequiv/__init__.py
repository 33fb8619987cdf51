"""Generalized Reed-Solomon codes and their extended form over GF(p^m).

Build codes, convert between the two families without changing the
generated subspace, and check the results by exact linear algebra.
"""

from ._backend import BACKEND
from .analysis import (
    CodeFingerprint,
    DistanceReport,
    MatrixFq,
    codes_equal,
    codes_equal_by_enumeration,
    codeword_set,
    fingerprint,
    min_distance,
    rank,
    rref,
)
from .codes import EgrsCode, GrsCode, codewords, egrs_new, encode_egrs, encode_grs, generator_matrix, grs_new
from .field import FieldSpec, field_new, gf
from .poly import Poly
from .transform import (
    GammaChoice,
    ShiftScaleParams,
    choose_gamma,
    egrs_to_grs,
    grs_to_egrs,
    normalize,
    shift_scale,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CodeFingerprint",
    "DistanceReport",
    "EgrsCode",
    "FieldSpec",
    "GammaChoice",
    "GrsCode",
    "MatrixFq",
    "Poly",
    "ShiftScaleParams",
    "choose_gamma",
    "codes_equal",
    "codes_equal_by_enumeration",
    "codeword_set",
    "codewords",
    "egrs_new",
    "egrs_to_grs",
    "encode_egrs",
    "encode_grs",
    "field_new",
    "fingerprint",
    "generator_matrix",
    "gf",
    "grs_new",
    "grs_to_egrs",
    "min_distance",
    "normalize",
    "rank",
    "rref",
    "shift_scale",
]
