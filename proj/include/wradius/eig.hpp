#pragma once

#include <vector>

#include "wradius/enclosure.hpp"
#include "wradius/matrix.hpp"

namespace wradius {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending; the k-th
/// column of eigenvectors pairs with eigenvalues[k].
struct HermitianEig {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Thin singular value decomposition A = U diag(s) V*. Singular values
/// descending; U has min(rows, cols) orthonormal columns, V likewise.
struct SvdFactors {
    ComplexMatrix U;
    std::vector<double> singular_values;
    ComplexMatrix V;
};

/// Full eigendecomposition by cyclic complex Jacobi rotations.
/// Requires a square matrix with ||H - H*||_F <= 1e-10 * (1 + ||H||_F);
/// the input is symmetrized before iterating. Deterministic: fixed sweep
/// order, ties in the ascending sort keep solver output order.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Eigenvalues only (ascending); skips the eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Largest eigenvalue of a Hermitian matrix.
double hermitian_lambda_max(const ComplexMatrix& h);

/// Thin SVD via the eigendecomposition of A*A (or AA* when rows < cols),
/// with re-orthonormalized left factor and basis completion in the kernel.
SvdFactors svd(const ComplexMatrix& a);

/// Certified enclosure of the spectral norm (largest singular value).
Enclosure operator_norm(const ComplexMatrix& a);

}  // namespace wradius
