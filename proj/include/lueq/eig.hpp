#pragma once

#include "lueq/complex_matrix.hpp"

namespace lueq {

struct EigenSystem {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // unitary, eigenvector k in column k
};

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Deterministic: identical input bytes give identical output
// bytes. Column phases are fixed so the largest-modulus entry of each
// eigenvector is real and non-negative (lowest index on ties); equal
// eigenvalues keep the order the sweep produced.
EigenSystem hermitian_eig(const ComplexMatrix& matrix);

// Modified Gram-Schmidt with a second pass, in place. Diagonal of the
// implicit R factor is kept real positive, which makes the result unique.
void orthonormalize_columns(ComplexMatrix& m);

// Extends k orthonormal columns (copied bitwise) to a full unitary by
// greedily absorbing the canonical basis vector with the largest residual.
ComplexMatrix complete_to_unitary(const ComplexMatrix& columns);

// exp(iH) for Hermitian H, via the eigendecomposition.
ComplexMatrix expi_hermitian(const ComplexMatrix& h);

}  // namespace lueq
