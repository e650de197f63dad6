"""Exact real Clifford algebras, primitive idempotents and U(n)-structures."""

from .blades import (Blade, Multivector, Signature, blade, blade_indices, blade_name,
                     blade_square, blades_commute, canonical_blades, grade_project,
                     mul_blades, mv_mul, mv_wedge, pseudoscalar)
from .errors import (CliffordError, DimensionMismatch, InvalidGeneratorSet, InvalidPlacement,
                     NotAKahlerIdempotent, NotInSubalgebra, ParseError, SearchExhausted,
                     SignatureMismatch, UnsupportedSignature)
from .ideals import (IdempotentReport, MatrixType, build_idempotent, classify,
                     division_ring_basis, find_generators, involution_count,
                     quaternion_relations_check, radon_hurwitz, verify_idempotent)
from .maps import GeneratorSubset, embed, quantize, restrict_symbol, symbolize
from .ratlinalg import RationalMatrix, extract_basis, row_reduce
from .textio import parse_multivector, render_multivector
from .unitary import (ProjectionDecomposition, UnitaryStructure, induce_idempotent,
                      is_unitary_member, kahler_polynomial, kahler_power,
                      rational_kahler_polynomial, recover_by_projection, recover_structure,
                      standard_structure)

__version__ = "0.1.0"
