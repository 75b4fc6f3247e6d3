#include "bsi/vn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"
#include "bsi/random.hpp"

namespace bsi {

MultiPolynomial::MultiPolynomial(std::size_t d, unsigned degree_cap) : d_(d), degree_cap_(degree_cap) {
    if (d_ < 1) throw InputError("polynomial needs at least one variable");
}

MultiPolynomial MultiPolynomial::constant(std::size_t d, cplx c) {
    MultiPolynomial p(d);
    p.add_term(Exponent(d, 0), c);
    return p;
}

MultiPolynomial MultiPolynomial::monomial(std::size_t d, Exponent alpha, cplx c) {
    MultiPolynomial p(d);
    p.add_term(alpha, c);
    return p;
}

MultiPolynomial& MultiPolynomial::add_term(const Exponent& alpha, cplx c) {
    if (alpha.size() != d_) {
        throw InputError("polynomial term has " + std::to_string(alpha.size()) + " exponents, expected d = " +
                         std::to_string(d_));
    }
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InputError("polynomial coefficient is not finite");
    unsigned deg = 0;
    for (auto a : alpha) deg += a;
    if (deg > degree_cap_) {
        throw InputError("polynomial term of total degree " + std::to_string(deg) + " exceeds the cap of " +
                         std::to_string(degree_cap_));
    }
    const cplx merged = terms_.count(alpha) ? terms_.at(alpha) + c : c;
    if (merged == cplx{}) {
        terms_.erase(alpha);
    } else {
        terms_[alpha] = merged;
    }
    return *this;
}

unsigned MultiPolynomial::total_degree() const {
    unsigned best = 0;
    for (const auto& [alpha, c] : terms_) {
        unsigned deg = 0;
        for (auto a : alpha) deg += a;
        best = std::max(best, deg);
    }
    return best;
}

unsigned MultiPolynomial::axis_degree(std::size_t axis) const {
    unsigned best = 0;
    for (const auto& [alpha, c] : terms_) best = std::max(best, alpha.at(axis));
    return best;
}

cplx MultiPolynomial::evaluate(const std::vector<cplx>& point) const {
    if (point.size() != d_) throw InputError("polynomial evaluation point has the wrong dimension");
    cplx acc{};
    for (const auto& [alpha, c] : terms_) {
        cplx term = c;
        for (std::size_t i = 0; i < d_; ++i)
            for (unsigned k = 0; k < alpha[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.d_ != b.d_) throw InputError("cannot add polynomials in different numbers of variables");
    MultiPolynomial out(a.d_, std::max(a.degree_cap_, b.degree_cap_));
    for (const auto& [alpha, c] : a.terms_) out.add_term(alpha, c);
    for (const auto& [alpha, c] : b.terms_) out.add_term(alpha, c);
    return out;
}

CMatrix eval_poly(const ContractionTuple& s, const MultiPolynomial& p) {
    if (p.d() != s.d()) {
        throw InputError("eval_poly: polynomial has d = " + std::to_string(p.d()) + ", tuple has d = " +
                         std::to_string(s.d()));
    }
    std::vector<PowerTable> pows;
    pows.reserve(s.d());
    for (const auto& m : s.mats()) pows.emplace_back(m);
    CMatrix out(s.dim(), s.dim());
    for (const auto& [alpha, c] : p.terms()) {
        CMatrix term = pows[0].get(alpha[0]);
        for (std::size_t i = 1; i < s.d(); ++i) term = term * pows[i].get(alpha[i]);
        term *= c;
        out += term;
    }
    return out;
}

TorusSup torus_sup(const MultiPolynomial& p, std::int64_t m) {
    if (m < 2) throw InputError("torus_sup: grid size M must be >= 2");
    const std::size_t d = p.d();
    std::size_t points = 0;
    if (!checked_pow(static_cast<std::size_t>(m), d, max_torus_points(), points)) {
        throw InputError("torus_sup: M^d = " + std::to_string(m) + "^" + std::to_string(d) +
                         " exceeds the torus grid cap of " + std::to_string(max_torus_points()) +
                         "; reduce M per axis or raise BSI_MAX_TORUS_POINTS");
    }

    double pad = 0.0;
    for (const auto& [alpha, c] : p.terms()) {
        unsigned deg = 0;
        for (auto a : alpha) deg += a;
        pad += std::abs(c) * deg;
    }
    pad *= std::numbers::pi / static_cast<double>(m);

    if (p.terms().empty()) return {0.0, 0.0, 0.0};

    std::vector<cplx> roots(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        roots[static_cast<std::size_t>(k)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
    }
    std::vector<Exponent> alphas;
    std::vector<cplx> coeffs;
    for (const auto& [alpha, c] : p.terms()) {
        alphas.push_back(alpha);
        coeffs.push_back(c);
    }
    const std::size_t nterms = alphas.size();
    const std::size_t last = d - 1;
    const std::size_t outer = points / static_cast<std::size_t>(m);

    // Outer loop over the first d-1 axes; each term's prefix factor is then
    // combined with the last axis in the inner loop.
    std::vector<std::int64_t> idx(last, 0);
    std::vector<cplx> prefix(nterms);
    double best = 0.0;
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t t = 0; t < nterms; ++t) {
            cplx v = coeffs[t];
            for (std::size_t i = 0; i < last; ++i) {
                v *= roots[static_cast<std::size_t>((idx[i] * alphas[t][i]) % m)];
            }
            prefix[t] = v;
        }
        for (std::int64_t k = 0; k < m; ++k) {
            cplx acc{};
            for (std::size_t t = 0; t < nterms; ++t) {
                acc += prefix[t] * roots[static_cast<std::size_t>((k * alphas[t][last]) % m)];
            }
            best = std::max(best, std::norm(acc));
        }
        for (std::size_t i = last; i-- > 0;) {
            if (++idx[i] < m) break;
            idx[i] = 0;
        }
    }
    const double grid_sup = std::sqrt(best);
    return {grid_sup, pad, grid_sup + pad};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

VnReport vn_check(const ContractionTuple& s, const MultiPolynomial& p, std::int64_t m, Tolerance tol) {
    VnReport rep;
    rep.lhs = op_norm(eval_poly(s, p));
    const TorusSup sup = torus_sup(p, m);
    rep.grid_sup = sup.grid_sup;
    rep.lipschitz_pad = sup.lipschitz_pad;
    rep.sup_upper = sup.sup_upper;
    if (rep.lhs > rep.sup_upper + tol.eps) {
        rep.verdict = Verdict::Violated;
    } else if (rep.lhs <= rep.grid_sup + tol.eps) {
        rep.verdict = Verdict::Holds;
    } else {
        rep.verdict = Verdict::Inconclusive;
    }
    return rep;
}

VnSearchReport vn_search(std::size_t d, std::size_t dim, std::size_t trials, std::uint64_t seed, std::int64_t m,
                         const std::vector<VnFixture>& fixtures, const VnSearchOptions& opts) {
    if (d < 1) throw InputError("vn_search: d must be >= 1");
    if (dim < 1) throw InputError("vn_search: dim must be >= 1");
    if (m < 2) throw InputError("vn_search: grid M must be >= 2");
    for (const auto& f : fixtures) {
        if (f.tuple.d() != d) throw InputError("vn_search: fixture '" + f.name + "' has the wrong d");
    }

    VnSearchReport rep;
    rep.d = d;
    rep.dim = dim;
    rep.seed = seed;
    rep.grid = m;
    rep.random_trials = trials;
    rep.fixture_trials = fixtures.size();
    rep.trials = trials + fixtures.size();

    auto run = [&](std::size_t trial, const std::string& source, const ContractionTuple& tuple,
                   const MultiPolynomial& poly) {
        std::int64_t grid = m;
        VnReport r = vn_check(tuple, poly, grid, opts.tol);
        for (int refine = 0; refine < opts.max_refinements && r.verdict == Verdict::Inconclusive; ++refine) {
            std::size_t pts = 0;
            if (!checked_pow(static_cast<std::size_t>(grid * 2), d, max_torus_points(), pts)) break;
            grid *= 2;
            r = vn_check(tuple, poly, grid, opts.tol);
        }
        if (r.grid_sup > 0.0) rep.max_ratio = std::max(rep.max_ratio, r.lhs / r.grid_sup);
        if (r.sup_upper > 0.0) rep.max_certified_ratio = std::max(rep.max_certified_ratio, r.lhs / r.sup_upper);
        switch (r.verdict) {
            case Verdict::Holds: ++rep.holds; break;
            case Verdict::Inconclusive: ++rep.inconclusive; break;
            case Verdict::Violated: rep.violations.push_back({trial, source, tuple, poly, r, grid}); break;
        }
    };

    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(seed + i);
        // Rescaling to norm 1 can overshoot by rounding; validate with a loose tolerance.
        ContractionTuple tuple(random_commuting_contractions(d, dim, rng), Tolerance{1e-9});
        const MultiPolynomial poly = random_polynomial(d, opts.max_poly_degree, 4, rng);
        run(i, "random", tuple, poly);
    }
    for (std::size_t k = 0; k < fixtures.size(); ++k) run(trials + k, fixtures[k].name, fixtures[k].tuple, fixtures[k].poly);
    return rep;
}

VnFixture crabb_davie_fixture() {
    // Basis: e = 0, f_1..f_3 = 1..3, g_1..g_3 = 4..6, h = 7.
    // T_i e = f_i, T_i f_i = -g_i, T_i f_j = g_k for {i,j,k} = {1,2,3}, T_i g_j = delta_ij h, T_i h = 0.
    constexpr std::size_t e = 0, h = 7;
    auto f = [](std::size_t i) { return 1 + i; };
    auto g = [](std::size_t i) { return 4 + i; };
    std::vector<CMatrix> mats;
    for (std::size_t i = 0; i < 3; ++i) {
        CMatrix t(8, 8);
        t(f(i), e) = 1.0;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == i) {
                t(g(i), f(j)) = -1.0;
            } else {
                t(g(3 - i - j), f(j)) = 1.0;
            }
        }
        t(h, g(i)) = 1.0;
        mats.push_back(std::move(t));
    }
    MultiPolynomial p(3);
    p.add_term({1, 1, 1}, 1.0);
    p.add_term({3, 0, 0}, -1.0);
    p.add_term({0, 3, 0}, -1.0);
    p.add_term({0, 0, 3}, -1.0);
    return {"crabb-davie", ContractionTuple(std::move(mats), Tolerance{1e-12}), std::move(p)};
}

}  // namespace bsi
