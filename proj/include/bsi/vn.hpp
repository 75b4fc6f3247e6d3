#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsi/cmatrix.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/limits.hpp"

namespace bsi {

inline constexpr unsigned kDefaultDegreeCap = 16;

using Exponent = std::vector<unsigned>;

/// Polynomial in d commuting variables with complex coefficients.
/// Zero coefficients are never stored.
class MultiPolynomial {
public:
    explicit MultiPolynomial(std::size_t d, unsigned degree_cap = kDefaultDegreeCap);

    static MultiPolynomial constant(std::size_t d, cplx c);
    static MultiPolynomial monomial(std::size_t d, Exponent alpha, cplx c = 1.0);

    /// Adds c X^alpha to the polynomial, merging with an existing term.
    MultiPolynomial& add_term(const Exponent& alpha, cplx c);

    std::size_t d() const noexcept { return d_; }
    unsigned degree_cap() const noexcept { return degree_cap_; }
    const std::map<Exponent, cplx>& terms() const noexcept { return terms_; }
    unsigned total_degree() const;
    /// Largest exponent of variable `axis` over all terms.
    unsigned axis_degree(std::size_t axis) const;

    cplx evaluate(const std::vector<cplx>& point) const;

    friend MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b);

private:
    std::size_t d_;
    unsigned degree_cap_;
    std::map<Exponent, cplx> terms_;
};

/// sum_alpha c_alpha prod_i S_i^alpha_i, factors in axis order.
CMatrix eval_poly(const ContractionTuple& s, const MultiPolynomial& p);

struct TorusSup {
    double grid_sup;
    double lipschitz_pad;
    double sup_upper;
};

/// max |p| over the M^d lattice of roots of unity, plus a Lipschitz pad
/// (pi/M) sum_j sum_alpha |c_alpha| alpha_j so that sup_upper bounds the
/// supremum over the whole torus.
TorusSup torus_sup(const MultiPolynomial& p, std::int64_t m);

enum class Verdict { Holds, Violated, Inconclusive };

std::string to_string(Verdict v);

struct VnReport {
    double lhs = 0.0;
    double grid_sup = 0.0;
    double lipschitz_pad = 0.0;
    double sup_upper = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

/// Compares ||p(S)|| with the certified torus bound:
/// VIOLATED if lhs exceeds sup_upper by more than tol, HOLDS if lhs <= grid_sup + tol,
/// INCONCLUSIVE otherwise (a finer grid may decide).
VnReport vn_check(const ContractionTuple& s, const MultiPolynomial& p, std::int64_t m, Tolerance tol = Tolerance{});

struct VnFixture {
    std::string name;
    ContractionTuple tuple;
    MultiPolynomial poly;
};

struct VnViolation {
    std::size_t trial;
    std::string source;  // "random" or a fixture name
    ContractionTuple tuple;
    MultiPolynomial poly;
    VnReport report;
    std::int64_t grid;
};

struct VnSearchReport {
    std::size_t d = 0;
    std::size_t dim = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t grid = 0;
    std::size_t random_trials = 0;
    std::size_t fixture_trials = 0;
    std::size_t holds = 0;
    std::size_t inconclusive = 0;
    double max_ratio = 0.0;            // max lhs / grid_sup
    double max_certified_ratio = 0.0;  // max lhs / sup_upper
    std::vector<VnViolation> violations;
};

struct VnSearchOptions {
    // INCONCLUSIVE trials are re-run with the grid doubled this many times,
    // as long as M^d stays under the torus grid cap.
    int max_refinements = 4;
    unsigned max_poly_degree = 3;
    Tolerance tol = Tolerance{};
};

/// Random commuting tuples p_j(Z) of one random contraction Z, each rescaled to norm 1,
/// checked against random polynomials. Trial i draws from a generator seeded with seed + i.
/// `fixtures` are appended to the pool after the random trials.
VnSearchReport vn_search(std::size_t d, std::size_t dim, std::size_t trials, std::uint64_t seed, std::int64_t m,
                         const std::vector<VnFixture>& fixtures = {}, const VnSearchOptions& opts = VnSearchOptions{});

/// Crabb-Davie commuting triple on C^8 and the cubic X1 X2 X3 - X1^3 - X2^3 - X3^3.
VnFixture crabb_davie_fixture();

}  // namespace bsi
