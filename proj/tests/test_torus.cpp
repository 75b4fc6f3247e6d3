#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "bsi/errors.hpp"
#include "bsi/torus.hpp"

using namespace bsi;

TEST_CASE("GridTime parsing and exact floor/frac") {
    const auto t = GridTime::parse("7/4,0/4,4/4");
    CHECK(t.denom() == 4);
    CHECK(t.dim() == 3);
    CHECK(t.floor(0) == 1);
    CHECK(t.frac_num(0) == 3);
    CHECK(t.floor(2) == 1);
    CHECK(t.frac_num(2) == 0);
    CHECK(t.to_string() == "7/4,0/4,4/4");
    CHECK(t + GridTime::parse("1/4,2/4,3/4") == GridTime::parse("8/4,2/4,7/4"));
    CHECK_THROWS_AS(GridTime::parse("1/4,1/3"), InputError);
    CHECK_THROWS_AS(GridTime::parse("1/0"), InputError);
    CHECK_THROWS_AS(GridTime::parse("-1/4"), InputError);
    CHECK_THROWS_AS(GridTime::parse("0.5"), InputError);
    CHECK_THROWS_AS(GridTime::parse(""), InputError);
    CHECK_THROWS_AS(GridTime::parse("1/4,"), InputError);
}

TEST_CASE("TorusBasis is lexicographic with axis 0 slowest") {
    const TorusBasis b(3, 2);
    CHECK(b.size() == 9);
    CHECK(b.index({1, 2}) == 5);
    CHECK(b.coords(7) == std::vector<std::int64_t>{2, 1});
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index(b.coords(i)) == i);
}

TEST_CASE("Koopman shifts: examples, periodicity, group law") {
    CHECK(koopman_u(5, 2, 1, 0) == CMatrix::identity(25));
    CHECK(koopman_u(2, 1, 1, 1) == CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    for (std::int64_t n : {2, 3, 4}) {
        for (std::size_t axis : {1u, 2u}) {
            const auto u = koopman_u(n, 2, axis, 1);
            CHECK(power(u, static_cast<unsigned>(n)) == CMatrix::identity(u.rows()));
            CHECK(u.adjoint() * u == CMatrix::identity(u.rows()));
            for (std::int64_t k = 0; k < 2 * n; ++k) {
                CHECK(koopman_u(n, 2, axis, k) * koopman_u(n, 2, axis, 3) == koopman_u(n, 2, axis, k + 3));
            }
        }
    }
    // Direct action: delta_(1,2) -> delta_(1, 2+2 mod 3).
    const auto u = koopman_u(3, 2, 2, 2);
    const TorusBasis b(3, 2);
    CHECK(u(b.index({1, 1}), b.index({1, 2})) == cplx(1.0));
    CHECK_THROWS_AS(koopman_u(3, 2, 0, 1), InputError);
    CHECK_THROWS_AS(koopman_u(3, 2, 3, 1), InputError);
}

TEST_CASE("projections: examples and exact projection properties") {
    CHECK(projector_p(4, 1, 1, 8) == CMatrix::identity(4));
    CHECK(projector_p(2, 1, 1, 1) == CMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}));
    for (std::int64_t n : {2, 3, 5}) {
        for (std::int64_t k = 0; k < 2 * n; ++k) {
            const auto p = projector_p(n, 2, 2, k);
            CHECK(p * p == p);
            CHECK(p.adjoint() == p);
            const TorusBasis b(n, 2);
            for (std::size_t i = 0; i < b.size(); ++i) {
                const auto m = b.coords(i)[1];
                CHECK(p(i, i) == cplx(m < n - k % n ? 1.0 : 0.0));
            }
        }
    }
}

TEST_CASE("operators on different axes commute exactly") {
    const std::int64_t n = 3;
    for (std::int64_t k = 0; k < n; ++k) {
        for (std::int64_t l = 0; l < n; ++l) {
            const auto u1 = koopman_u(n, 2, 1, k), p1 = projector_p(n, 2, 1, k);
            const auto u2 = koopman_u(n, 2, 2, l), p2 = projector_p(n, 2, 2, l);
            CHECK(u1 * u2 == u2 * u1);
            CHECK(u1 * p2 == p2 * u1);
            CHECK(p1 * u2 == u2 * p1);
            CHECK(p1 * p2 == p2 * p1);
        }
    }
}

TEST_CASE("commutation relation holds exactly on the grid") {
    CHECK(bscr_check(2, 1, 1) == 0.0);
    const auto lhs = projector_p(2, 1, 1, 1) * koopman_u(2, 1, 1, 1);
    CHECK(lhs == CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
    CHECK(koopman_u(2, 1, 1, 1) * bscr_q(2, 1, 1) == lhs);
    for (std::int64_t n : {1, 2, 3, 4, 5, 7}) {
        for (std::int64_t s = 0; s < 2 * n; ++s) {
            for (std::int64_t t = 0; t < 2 * n; ++t) {
                CHECK(bscr_check(n, s, t) == 0.0);
                // Q must equal U(t)* P(s) U(t).
                const auto u = koopman_u(n, 1, 1, t);
                CHECK(bscr_q(n, s, t) == u.adjoint() * projector_p(n, 1, 1, s) * u);
            }
        }
    }
    // Integer times.
    CHECK(bscr_check(4, 8, 4) == 0.0);
}

namespace {

// (U(t)* P(s) U(t) 1)(m) = [ (m + t) mod N < N - (s mod N) ].
double trace_oracle(std::int64_t n, std::int64_t s, std::int64_t t, std::int64_t m) {
    return (m + t) % n < n - s % n ? 1.0 : 0.0;
}

}  // namespace

TEST_CASE("trace: zero windows and identity at s = 0") {
    const std::int64_t n = 12;
    const std::vector<cplx> ones(n, 1.0);
    std::vector<cplx> f;
    for (std::int64_t m = 0; m < n; ++m) f.emplace_back(0.5 * m, -1.0);
    const auto same = bscr_trace(n, 0, 5, f);
    for (std::int64_t m = 0; m < n; ++m) CHECK(same[m].value == f[m]);

    for (std::int64_t s = 0; s < 2 * n; ++s) {
        for (std::int64_t t = 0; t < 2 * n; ++t) {
            const auto rows = bscr_trace(n, s, t, ones);
            REQUIRE(rows.size() == static_cast<std::size_t>(n));
            const std::int64_t fs = s % n, ft = t % n;
            for (std::int64_t m = 0; m < n; ++m) {
                CHECK(rows[m].theta == doctest::Approx(2.0 * std::numbers::pi * m / n));
                CHECK(rows[m].value.real() == trace_oracle(n, s, t, m));
                if (fs == 0) continue;
                // In units of 2 pi / N: {s}+{t} < 1 zeroes [N - fs - ft, N - ft);
                // otherwise only [N - ft, 2N - fs - ft) survives.
                const bool in_window = fs + ft < n ? (m >= n - fs - ft && m < n - ft) : (m >= n - ft && m < 2 * n - fs - ft);
                CHECK(rows[m].value.real() == (fs + ft < n ? (in_window ? 0.0 : 1.0) : (in_window ? 1.0 : 0.0)));
            }
        }
    }
    CHECK_THROWS_AS(bscr_trace(4, 1, 1, std::vector<cplx>(3)), InputError);
}

TEST_CASE("trace CSV has a header and one row per grid point") {
    const auto csv = trace_to_csv(bscr_trace(4, 1, 2, std::vector<cplx>(4, 1.0)));
    CHECK(csv.rfind("theta,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(csv.find("\n0,1,0\n") != std::string::npos);
}
