#pragma once

#include <optional>
#include <vector>

#include "bsi/cmatrix.hpp"
#include "bsi/limits.hpp"

namespace bsi {

/// Kronecker product. Entry (i*rows_B + k, j*cols_B + l) is A(i,j) * B(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Eigenvalues in ascending order, with the matching orthonormal eigenvectors
/// stored as the columns of `vectors` (only when requested).
struct HermitianEigen {
    std::vector<double> values;
    std::optional<CMatrix> vectors;
};

/// Cyclic complex Jacobi eigensolver. The strictly Hermitian part
/// (A + A*)/2 is diagonalised; callers check hermiticity themselves.
/// Throws NumericalError if the off-diagonal mass does not vanish within the sweep cap.
HermitianEigen hermitian_eigen(const CMatrix& a, bool want_vectors = true);

/// max |A - A*| entrywise.
double hermitian_deviation(const CMatrix& a);

/// Largest singular value, via the eigenvalues of the smaller Gram matrix.
double op_norm(const CMatrix& a);

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in [-tol, 0) are clamped to zero; anything below -tol is rejected.
CMatrix psd_sqrt(const CMatrix& a, Tolerance tol = Tolerance{});

inline constexpr double kMatrixExpNormCap = 50.0;

/// exp(t A) by scaling and squaring of a truncated Taylor series.
/// Throws InputError when the operator norm of tA exceeds kMatrixExpNormCap.
CMatrix matrix_exp(const CMatrix& a, double t);

}  // namespace bsi
