"""Dense complex matrix/vector arithmetic shared by every module."""
from .dense import (
    ComplexMatrix,
    ComplexVector,
    adjoint,
    as_matrix,
    as_vector,
    frobenius_norm,
    identity,
    inner_product,
    is_hermitian,
    is_real,
    matmul,
    matvec,
)

__all__ = [
    "ComplexMatrix",
    "ComplexVector",
    "adjoint",
    "as_matrix",
    "as_vector",
    "frobenius_norm",
    "identity",
    "inner_product",
    "is_hermitian",
    "is_real",
    "matmul",
    "matvec",
]
