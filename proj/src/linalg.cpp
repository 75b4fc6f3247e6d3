#include "bsi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bsi/errors.hpp"

namespace bsi {

namespace {

constexpr int kMaxJacobiSweeps = 80;
constexpr double kMachEps = 2.220446049250313e-16;

double off_diagonal_norm(const CMatrix& h) {
    double acc = 0.0;
    const std::size_t n = h.rows();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) acc += 2.0 * std::norm(h(p, q));
    return std::sqrt(acc);
}

CMatrix gram(const CMatrix& a) {
    // The smaller of A*A and AA*; both share the nonzero spectrum.
    CMatrix g = a.rows() >= a.cols() ? a.adjoint() * a : a * a.adjoint();
    const std::size_t n = g.rows();
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = g(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) g(j, i) = std::conj(g(i, j));
    }
    return g;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    check_entry_budget(rows, cols, "kron");
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

double hermitian_deviation(const CMatrix& a) {
    if (!a.is_square()) throw InputError("hermitian_deviation: matrix must be square");
    double dev = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
    return dev;
}

HermitianEigen hermitian_eigen(const CMatrix& a, bool want_vectors) {
    if (!a.is_square()) throw InputError("hermitian_eigen: matrix must be square");
    const std::size_t n = a.rows();

    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(j, i) = std::conj(h(i, j));
        }
    }
    std::optional<CMatrix> v;
    if (want_vectors) v = CMatrix::identity(n);

    const double scale = h.frobenius_norm();
    bool converged = scale == 0.0;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(h) <= kMachEps * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = h(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cplx e = apq / mag;
                const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx se_conj = s * std::conj(e);
                const cplx ce_conj = c * std::conj(e);
                const cplx se = s * e;
                const cplx ce = c * e;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hkp = h(k, p);
                    const cplx hkq = h(k, q);
                    h(k, p) = c * hkp - se_conj * hkq;
                    h(k, q) = s * hkp + ce_conj * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hpk = h(p, k);
                    const cplx hqk = h(q, k);
                    h(p, k) = c * hpk - se * hqk;
                    h(q, k) = s * hpk + ce * hqk;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();

                if (v) {
                    CMatrix& vm = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = vm(k, p);
                        const cplx vkq = vm(k, q);
                        vm(k, p) = c * vkp - se_conj * vkq;
                        vm(k, q) = s * vkp + ce_conj * vkq;
                    }
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(h) > kMachEps * scale) {
        throw NumericalError("hermitian_eigen: no convergence after " + std::to_string(kMaxJacobiSweeps) +
                             " sweeps (n=" + std::to_string(n) + ", off-diagonal norm " +
                             std::to_string(off_diagonal_norm(h)) + ", scale " + std::to_string(scale) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return h(i, i).real() < h(j, j).real(); });

    HermitianEigen out;
    out.values.reserve(n);
    for (std::size_t i : order) out.values.push_back(h(i, i).real());
    if (v) {
        CMatrix sorted(n, n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t k = 0; k < n; ++k) sorted(k, col) = (*v)(k, order[col]);
        out.vectors = std::move(sorted);
    }
    return out;
}

double op_norm(const CMatrix& a) {
    if (a.max_abs() == 0.0) return 0.0;
    if (a.rows() == 1 || a.cols() == 1) return a.frobenius_norm();
    const CMatrix g = gram(a);
    const auto eig = hermitian_eigen(g, false);
    const double top = eig.values.back();
    if (!std::isfinite(top)) throw NumericalError("op_norm: non-finite Gram eigenvalue");
    return std::sqrt(std::max(top, 0.0));
}

CMatrix psd_sqrt(const CMatrix& a, Tolerance tol) {
    if (!a.is_square()) throw InputError("psd_sqrt: matrix must be square");
    const double herm = hermitian_deviation(a);
    if (herm > tol.eps) {
        throw InputError("psd_sqrt: matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    const auto eig = hermitian_eigen(a, true);
    const std::size_t n = a.rows();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = eig.values[i];
        if (lambda < -tol.eps) {
            throw InputError("psd_sqrt: eigenvalue " + std::to_string(lambda) + " is below -tol");
        }
        roots[i] = std::sqrt(std::max(lambda, 0.0));
    }
    const CMatrix& v = *eig.vectors;
    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < n; ++k) {
                if (roots[k] == 0.0) continue;
                acc += v(i, k) * roots[k] * std::conj(v(j, k));
            }
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
    for (std::size_t i = 0; i < n; ++i) out(i, i) = out(i, i).real();
    return out;
}

CMatrix matrix_exp(const CMatrix& a, double t) {
    if (!a.is_square()) throw InputError("matrix_exp: matrix must be square");
    if (!std::isfinite(t)) throw InputError("matrix_exp: time must be finite");
    const std::size_t n = a.rows();
    CMatrix x = cplx{t} * a;
    const double nrm = op_norm(x);
    if (nrm > kMatrixExpNormCap) {
        throw InputError("matrix_exp: ||tA|| = " + std::to_string(nrm) + " exceeds the cap of " +
                         std::to_string(kMatrixExpNormCap));
    }
    if (nrm == 0.0) return CMatrix::identity(n);

    int squarings = 0;
    if (nrm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.25)));
    x *= std::ldexp(1.0, -squarings);

    // ||x|| <= 1/4, so 20 terms leave a remainder far below binary64 resolution.
    CMatrix sum = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = term * x;
        term *= 1.0 / k;
        sum += term;
        if (term.max_abs() <= 1e-18 * sum.max_abs()) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    if (!sum.all_finite()) throw NumericalError("matrix_exp: non-finite result");
    return sum;
}

}  // namespace bsi
