"""Exact-arithmetic engine for the Lie superalgebra q(2) and its modules V_p."""

from .scalars import ExtScalar, ExtensionMismatchError, NotInvertibleError, ext
from .algebra import GENERATORS, GeneratorId, SuperElement, bracket, check_graded_jacobi
from .rep import Basis, rep_matrix, gram_matrix, change_of_basis
from .diffop import DiffOp, Pauli, Poly, PolyPair, realization
from .models import Model, ModelSpec

__version__ = "0.1.0"

__all__ = [
    "ExtScalar",
    "ExtensionMismatchError",
    "NotInvertibleError",
    "ext",
    "GENERATORS",
    "GeneratorId",
    "SuperElement",
    "bracket",
    "check_graded_jacobi",
    "Basis",
    "rep_matrix",
    "gram_matrix",
    "change_of_basis",
    "DiffOp",
    "Pauli",
    "Poly",
    "PolyPair",
    "realization",
    "Model",
    "ModelSpec",
    "__version__",
]
