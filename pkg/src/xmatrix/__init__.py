"""O(n) linear algebra for X-matrices: matrices supported on the diagonal and anti-diagonal."""
from .core import (FLOAT, RATIONAL, BlockDecomposition, PairBlock, XMatrix, add, anti_identity,
                   anti_transpose, astype, decompose, diagonal, from_dense, from_diagonals,
                   identity, multiply, negate, power, recompose, scale, subtract, to_dense,
                   transpose, zeros)
from .errors import (ConjugatePairingFailure, DimensionError, DivergenceSuspected, FieldError,
                     InvalidScalar, MethodPreconditionViolated, NonConvergence, NotBisymmetric,
                     NotXShaped, ParseError, SingularMatrix, XMatrixError)
from .linalg import InverseMethod, determinant, inverse, is_invertible
from .spectral import (CassiniOval, CharPolyFactors, EigenPair, GershgorinDisk, MonicPoly,
                       Position, cassini_classify, cassini_contour, cassini_ovals, char_poly,
                       char_poly_coeffs, char_poly_factors, eigenvalues, eigenvectors,
                       gershgorin_disks, isospectral_reduction)
from .companion import Layout, RealFactorization, durand_kerner, real_factorize, x_companion
from .funcs import SeriesResult, cayley, evaluate_series, exp_x, poly_eval
from .bisym import BisymCertificate, bisym_eigen, common_eigenbasis, is_bisymmetric, is_central
from .io import parse_matrix, write_matrix

__version__ = "0.1.0"
