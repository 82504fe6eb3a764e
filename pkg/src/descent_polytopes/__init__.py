"""Face numbers and Ehrhart polynomials of descent polytopes."""

from .algebra import NCSeries, TPoly, phi_series
from .ehrhart import (
    EhrhartPoly,
    count_lattice_points,
    descent_statistic,
    ehrhart_polynomial,
    ehrhart_series,
    rword_counts,
)
from .fvector import (
    FPolynomial,
    f_alternating,
    f_direct,
    f_factorization,
    f_phi,
    f_recurrence,
    facet_count,
    kl_pair,
    vertex_count,
)
from .geometry import enumerate_vertices, f_vector_oracle, face_lattice
from .inequality import find_max_fvector, verify_inequality, verify_table1
from .words import XYWord, kappa, word_from_set

__all__ = [
    "EhrhartPoly", "FPolynomial", "NCSeries", "TPoly", "XYWord",
    "count_lattice_points", "descent_statistic", "ehrhart_polynomial", "ehrhart_series",
    "enumerate_vertices", "f_alternating", "f_direct", "f_factorization", "f_phi",
    "f_recurrence", "f_vector_oracle", "face_lattice", "facet_count", "find_max_fvector",
    "kappa", "kl_pair", "phi_series", "rword_counts", "verify_inequality", "verify_table1",
    "vertex_count", "word_from_set",
]
