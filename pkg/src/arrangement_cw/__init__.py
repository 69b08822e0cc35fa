"""Exact minimal CW complexes and twisted homology for real hyperplane arrangements."""

from .chain import (TwistedComplex, build_complex, generic_homology_dims, homology_dims,
                    resonance_test, symbolic_generic_homology, verify_d2)
from .degree import clip_radius, degree, degree_table
from .faces import (Face, FacePoset, bounded_chambers, compose, enumerate_chambers,
                    enumerate_faces, face_leq, is_bounded)
from .flags import OrientedFlag, build_flag, is_generic, partition, sign_of
from .formats import parse_input, parse_text
from .geometry import Arrangement, Hyperplane, feasible, sample_point, side_of
from .laurent import LaurentPoly, parse_laurent
from .lattice import Polynomial, beta, build_lattice, deletion_restriction, poincare, poincare_polynomial
from .local_system import RankOneSystem, skein
from .pi1 import Presentation, abelianize, presentation, smith_normal_form
from .salvetti import build_salvetti, euler_characteristic

__all__ = [
    "Arrangement", "Face", "FacePoset", "Hyperplane", "LaurentPoly", "OrientedFlag",
    "Polynomial", "Presentation", "RankOneSystem", "TwistedComplex",
    "abelianize", "beta", "bounded_chambers", "build_complex", "build_flag", "build_lattice",
    "build_salvetti", "clip_radius", "compose", "degree", "degree_table", "deletion_restriction",
    "enumerate_chambers", "enumerate_faces", "euler_characteristic", "face_leq", "feasible",
    "generic_homology_dims", "homology_dims", "is_bounded", "is_generic", "parse_input",
    "parse_laurent", "parse_text", "partition", "poincare", "poincare_polynomial", "presentation",
    "resonance_test", "sample_point", "side_of", "sign_of", "skein", "smith_normal_form",
    "symbolic_generic_homology", "verify_d2",
]
