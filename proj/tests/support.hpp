#pragma once

// Shared fixtures and test-only reference computations.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bsi/cmatrix.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/random.hpp"

namespace bsi::test {

inline std::string source_path(const std::string& rel) { return std::string(BSI_SOURCE_DIR) + "/" + rel; }

// Textbook triple loop, no zero skipping.
inline CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

inline double max_entry_diff(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

// Largest singular value by power iteration on A*A; independent of the Jacobi solver.
inline double power_iteration_norm(const CMatrix& a, int iters = 2000) {
    std::vector<cplx> x(a.cols());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = cplx(1.0 + 0.1 * static_cast<double>(i), 0.3);
    const CMatrix g = naive_mul(a.adjoint(), a);
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        std::vector<cplx> y(x.size(), 0.0);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) y[i] += g(i, j) * x[j];
        double nrm = 0.0;
        for (auto& v : y) nrm += std::norm(v);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        for (auto& v : y) v /= nrm;
        lambda = nrm;
        x = y;
    }
    return std::sqrt(lambda);
}

struct CorpusCase {
    std::size_t d;
    std::size_t dim;
    std::int64_t n;
    std::uint64_t seed;
};

// 50 tuples over configurations whose exhaustive pair checks stay cheap:
// d = 3 only with N <= 3 or dim = 1.
inline std::vector<CorpusCase> law_corpus() {
    static const CorpusCase shapes[] = {{1, 1, 2, 0}, {1, 2, 3, 0}, {1, 3, 4, 0}, {2, 1, 4, 0}, {2, 2, 3, 0},
                                        {2, 3, 4, 0}, {2, 2, 2, 0}, {3, 1, 4, 0}, {3, 2, 2, 0}, {3, 3, 3, 0}};
    std::vector<CorpusCase> out;
    std::uint64_t seed = 1000;
    for (int rep = 0; rep < 5; ++rep)
        for (auto c : shapes) {
            c.seed = seed++;
            out.push_back(c);
        }
    return out;
}

// Random commuting contractions of norm exactly one up to rounding.
inline ContractionTuple corpus_tuple(const CorpusCase& c) {
    Rng rng(c.seed);
    return ContractionTuple(random_commuting_contractions(c.d, c.dim, rng), Tolerance{1e-9});
}

}  // namespace bsi::test
