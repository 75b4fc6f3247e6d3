#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bsi {

using cplx = std::complex<double>;

/// Dense row-major complex matrix with positive dimensions and finite entries.
///
/// Every operator the library manipulates (Koopman shifts, indicator
/// projections, discretised semigroup values, dilations) is carried by this
/// type. Arithmetic is plain binary64; products skip exact zeros on the left
/// operand, which keeps the block-permutation matrices of the interpolation
/// module cheap to multiply.
class CMatrix {
public:
    /// Zero matrix. Throws InputError on a zero dimension or when the entry cap is exceeded.
    CMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major `data`; validates length and finiteness.
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
    /// Literal construction, mostly for tests: {{a, b}, {c, d}}.
    static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static CMatrix diagonal(std::span<const cplx> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> data() noexcept { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx s);

    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    /// Exact entrywise equality.
    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

/// out = a * b into an existing buffer of the right shape.
void multiply_into(const CMatrix& a, const CMatrix& b, CMatrix& out);

std::vector<cplx> apply(const CMatrix& a, std::span<const cplx> x);

/// A^k by binary powering; A must be square. A^0 is the identity.
CMatrix power(const CMatrix& a, unsigned k);

/// Frobenius norm of a - b. An upper bound on the operator norm of the difference.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

}  // namespace bsi
