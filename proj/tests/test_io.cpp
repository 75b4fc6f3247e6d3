#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

#include "bsi/errors.hpp"
#include "bsi/io.hpp"
#include "bsi/random.hpp"

using namespace bsi;

namespace {

bool bitwise_equal(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_CASE("matrix JSON round-trips binary64 values exactly") {
    Rng rng(123);
    std::uniform_int_distribution<std::uint64_t> bits;
    std::vector<cplx> vals = {0.1,
                              cplx(1.0 / 3.0, -2.0 / 7.0),
                              std::numeric_limits<double>::denorm_min(),
                              std::numeric_limits<double>::max(),
                              std::numeric_limits<double>::min(),
                              cplx(-0.0, 0.0),
                              std::nextafter(1.0, 2.0)};
    while (vals.size() < 64) {
        const double re = std::bit_cast<double>(bits(rng));
        const double im = std::bit_cast<double>(bits(rng));
        if (std::isfinite(re) && std::isfinite(im)) vals.emplace_back(re, im);
    }
    const CMatrix m(8, 8, vals);
    const auto text = io::dump(io::to_json(m));
    const auto back = io::matrix_from_json(io::Json::parse(text));
    CHECK(bitwise_equal(m, back));
    CHECK(io::dump(io::to_json(back)) == text);
}

TEST_CASE("matrix JSON layout") {
    const auto j = io::to_json(CMatrix::from_rows({{1.0, cplx(0, 2)}}));
    CHECK(j.dump() == R"({"rows":1,"cols":2,"data":[[1.0,0.0],[0.0,2.0]]})");
    CHECK(io::matrix_from_json(io::Json::parse(R"({"rows":1,"cols":1,"data":[[1,0]]})"))(0, 0) == cplx(1.0));
}

TEST_CASE("malformed matrices are input errors") {
    const char* bad[] = {
        R"([])",
        R"({"rows":2,"cols":1,"data":[[1,0]]})",
        R"({"rows":0,"cols":1,"data":[]})",
        R"({"rows":1,"cols":1,"data":[[1]]})",
        R"({"rows":1,"cols":1,"data":[["a",0]]})",
        R"({"rows":1.5,"cols":1,"data":[[1,0]]})",
        R"({"cols":1,"data":[[1,0]]})",
        R"({"rows":1,"cols":1,"data":[[1e999,0]]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(text, nullptr, false)), InputError);
    }
}

TEST_CASE("oversized matrices are rejected before allocation") {
    const auto saved = max_matrix_entries();
    set_max_matrix_entries(16);
    CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(R"({"rows":5,"cols":5,"data":[]})")), InputError);
    set_max_matrix_entries(saved);
}

TEST_CASE("tuple, polynomial and candidate round-trips") {
    Rng rng(5);
    const ContractionTuple t(random_commuting_contractions(2, 3, rng), Tolerance{1e-9});
    const auto tj = io::to_json(t);
    CHECK(tj["d"] == 2);
    CHECK(tj["dim"] == 3);
    const auto back = io::tuple_from_json(io::Json::parse(tj.dump()), Tolerance{1e-9});
    for (std::size_t i = 0; i < 2; ++i) CHECK(bitwise_equal(back[i], t[i]));
    auto wrong = tj;
    wrong["d"] = 3;
    CHECK_THROWS_AS(io::tuple_from_json(wrong), InputError);
    wrong = tj;
    wrong["dim"] = 2;
    CHECK_THROWS_AS(io::tuple_from_json(wrong), InputError);

    const auto p = random_polynomial(3, 3, 4, rng);
    const auto pj = io::to_json(p);
    CHECK(io::poly_from_json(io::Json::parse(pj.dump())).terms() == p.terms());
    CHECK_THROWS_AS(io::poly_from_json(io::Json::parse(R"({"d":2,"terms":[{"alpha":[1],"coeff":[1,0]}]})")),
                    InputError);
    CHECK_THROWS_AS(io::poly_from_json(io::Json::parse(R"({"d":1,"terms":[{"alpha":[-1],"coeff":[1,0]}]})")),
                    InputError);

    const DilationCandidate c{{CMatrix::identity(2)}, CMatrix::identity(2), 3};
    const auto cj = io::to_json(c);
    const auto cb = io::candidate_from_json(cj);
    CHECK(cb.n_max == 3);
    CHECK(cb.v[0] == c.v[0]);
    CHECK(cb.r == c.r);
}

TEST_CASE("reports keep a fixed field order") {
    VnReport r;
    r.lhs = 1.0;
    r.verdict = Verdict::Holds;
    CHECK(io::to_json(r).dump() ==
          R"({"lhs":1.0,"grid_sup":0.0,"lipschitz_pad":0.0,"sup_upper":0.0,"verdict":"HOLDS"})");
    const std::vector<SweepRow> rows{{0.5, 0.25}};
    CHECK(io::to_json(rows).dump() == R"([{"eps":0.5,"sup_error":0.25}])");
}

TEST_CASE("file helpers report unreadable paths") {
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/x.json"), InputError);
    CHECK_THROWS_AS(io::write_text_file("/nonexistent/dir/x.json", "{}"), InputError);
}
