#include "bsi/random.hpp"

#include <cmath>
#include <numbers>

#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"
#include "bsi/vn.hpp"

namespace bsi {

namespace {

cplx gaussian(Rng& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> ud(lo, hi);
    return ud(rng);
}

CMatrix univariate(const CMatrix& z, const std::vector<cplx>& coeffs) {
    // Horner
    const std::size_t n = z.rows();
    CMatrix acc = coeffs.back() * CMatrix::identity(n);
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k] * CMatrix::identity(n);
    return acc;
}

}  // namespace

CMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
    CMatrix m(rows, cols);
    for (auto& v : m.data()) v = gaussian(rng);
    return m;
}

CMatrix random_unitary(std::size_t n, Rng& rng) {
    CMatrix q = random_gaussian(n, n, rng);
    // Modified Gram-Schmidt on columns, twice for orthogonality at rounding level.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx dot{};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) throw NumericalError("random_unitary: degenerate Gaussian draw");
            for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
        }
    }
    return q;
}

CMatrix random_contraction(std::size_t n, Rng& rng, double norm) {
    CMatrix g = random_gaussian(n, n, rng);
    const double s = op_norm(g);
    if (s == 0.0) return g;
    g *= norm / s;
    return g;
}

std::vector<CMatrix> random_commuting_contractions(std::size_t d, std::size_t dim, Rng& rng, unsigned max_degree) {
    if (max_degree < 1) throw InputError("random_commuting_contractions: max_degree must be >= 1");
    const CMatrix z = random_contraction(dim, rng, 1.0);
    std::uniform_int_distribution<unsigned> deg(1, max_degree);
    std::vector<CMatrix> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<cplx> coeffs(deg(rng) + 1);
        for (auto& c : coeffs) c = gaussian(rng);
        CMatrix s = univariate(z, coeffs);
        const double nrm = op_norm(s);
        if (nrm > 0.0) s *= 1.0 / nrm;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CMatrix> random_commuting_unitaries(std::size_t d, std::size_t dim, Rng& rng) {
    const CMatrix w = random_unitary(dim, rng);
    const CMatrix w_adj = w.adjoint();
    std::vector<CMatrix> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<cplx> phases(dim);
        for (auto& p : phases) p = std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
        out.push_back(w * CMatrix::diagonal(phases) * w_adj);
    }
    return out;
}

CMatrix random_doubly_stochastic(std::size_t n, Rng& rng) {
    std::vector<double> a(n * n);
    for (auto& v : a) v = uniform(rng, 0.05, 1.0);
    for (int it = 0; it < 10000; ++it) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += a[i * n + j];
            for (std::size_t j = 0; j < n; ++j) a[i * n + j] /= s;
        }
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += a[i * n + j];
            for (std::size_t i = 0; i < n; ++i) a[i * n + j] /= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += a[i * n + j];
            worst = std::max(worst, std::abs(s - 1.0));
        }
        if (worst <= 1e-15) break;
    }
    std::vector<cplx> data(a.begin(), a.end());
    return CMatrix(n, n, std::move(data));
}

std::vector<CMatrix> random_commuting_circulants(std::size_t d, std::size_t n, Rng& rng) {
    std::vector<CMatrix> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> w(n);
        double total = 0.0;
        for (auto& v : w) total += (v = uniform(rng, 0.0, 1.0));
        for (auto& v : w) v /= total;
        CMatrix c(n, n);
        for (std::size_t shift = 0; shift < n; ++shift)
            for (std::size_t r = 0; r < n; ++r) c(r, (r + shift) % n) += w[shift];
        out.push_back(std::move(c));
    }
    return out;
}

MultiPolynomial random_polynomial(std::size_t d, unsigned max_degree, unsigned max_terms, Rng& rng) {
    if (max_terms < 1) throw InputError("random_polynomial: max_terms must be >= 1");
    MultiPolynomial p(d);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> axis(0, d - 1);
    const unsigned count = nterms(rng);
    for (unsigned k = 0; k < count; ++k) {
        Exponent alpha(d, 0);
        const unsigned total = deg(rng);
        for (unsigned u = 0; u < total; ++u) ++alpha[axis(rng)];
        p.add_term(alpha, gaussian(rng));
    }
    if (p.terms().empty()) p.add_term(Exponent(d, 0), 1.0);
    return p;
}

}  // namespace bsi
