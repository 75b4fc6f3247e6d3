#include "bsi/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bsi/errors.hpp"
#include "bsi/limits.hpp"

namespace bsi {

namespace {

void require_positive(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw InputError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    require_positive(rows, cols);
    check_entry_budget(rows, cols, "matrix");
    data_.assign(rows * cols, cplx{});
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    require_positive(rows, cols);
    check_entry_budget(rows, cols, "matrix");
    if (data_.size() != rows * cols) {
        throw InputError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(rows * cols));
    }
    if (!all_finite()) throw InputError("matrix contains a non-finite entry");
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<cplx> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw InputError("from_rows: ragged rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return CMatrix(r, c, std::move(data));
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

namespace {

// Sum of squares is exact enough unless it over- or underflows; rescale only then.
double scaled_norm(const std::vector<cplx>& v, double acc) {
    if (std::isfinite(acc) && (acc == 0.0 || acc >= 1e-290)) return std::sqrt(acc);
    double scale = 0.0;
    for (const auto& x : v) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x / scale);
    return scale * std::sqrt(s);
}

}  // namespace

double CMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto& v : data_) acc += v.real() * v.real() + v.imag() * v.imag();
    return scaled_norm(data_, acc);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

CMatrix operator+(CMatrix a, const CMatrix& b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix& b) {
    a -= b;
    return a;
}

void multiply_into(const CMatrix& a, const CMatrix& b, CMatrix& out) {
    if (a.cols() != b.rows()) {
        throw InputError("multiply: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
    }
    if (out.rows() != a.rows() || out.cols() != b.cols()) throw InputError("multiply: output has the wrong shape");
    const std::size_t n = b.cols();
    const cplx* bd = b.data().data();
    cplx* od = out.data().data();
    std::fill(od, od + out.size(), cplx{});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx* orow = od + i * n;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            const cplx* brow = bd + k * n;
            // Plain real arithmetic: std::complex's product carries NaN recovery branches.
            const double ar = aik.real(), ai = aik.imag();
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[j].real(), bi = brow[j].imag();
                orow[j] = cplx(orow[j].real() + (ar * br - ai * bi), orow[j].imag() + (ar * bi + ai * br));
            }
        }
    }
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InputError("multiply: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
    }
    CMatrix out(a.rows(), b.cols());
    multiply_into(a, b, out);
    return out;
}

CMatrix operator*(cplx s, CMatrix a) {
    a *= s;
    return a;
}

std::vector<cplx> apply(const CMatrix& a, std::span<const cplx> x) {
    if (x.size() != a.cols()) {
        throw InputError("apply: vector length " + std::to_string(x.size()) + " does not match " +
                         std::to_string(a.cols()) + " columns");
    }
    std::vector<cplx> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx acc{};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

CMatrix power(const CMatrix& a, unsigned k) {
    if (!a.is_square()) throw InputError("power: matrix must be square");
    CMatrix result = CMatrix::identity(a.rows());
    CMatrix base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("frobenius_distance: shape mismatch");
    const cplx* ad = a.data().data();
    const cplx* bd = b.data().data();
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double re = ad[k].real() - bd[k].real();
        const double im = ad[k].imag() - bd[k].imag();
        acc += re * re + im * im;
    }
    if (std::isfinite(acc) && (acc == 0.0 || acc >= 1e-290)) return std::sqrt(acc);
    return (a - b).frobenius_norm();
}

}  // namespace bsi
