#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bsi/dilation.hpp"
#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"
#include "bsi/random.hpp"
#include "bsi/structure.hpp"
#include "support.hpp"

using namespace bsi;
using bsi::test::max_entry_diff;

TEST_CASE("Parrott tuple: exact zero products and unit norms") {
    const auto r1 = CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const auto r2 = CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    const auto pt = parrott_tuple(r1, r2);
    CHECK(pt.warnings.empty());
    REQUIRE(pt.tuple.d() == 3);
    CHECK(pt.tuple.dim() == 4);
    CHECK(pt.tuple.max_commutator() == 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(op_norm(pt.tuple[i]) == doctest::Approx(1.0).epsilon(1e-14));
        for (std::size_t j = 0; j < 3; ++j) CHECK((pt.tuple[i] * pt.tuple[j]).max_abs() == 0.0);
    }
    CHECK(pt.tuple[0] == kron(r1, elementary(1, 0)));
}

TEST_CASE("Parrott tuple: degenerate and invalid inputs") {
    const auto id = CMatrix::identity(2);
    const auto pt = parrott_tuple(id, id);
    CHECK(pt.warnings.size() == 1);
    CHECK_THROWS_AS(parrott_tuple(0.5 * id, id), InputError);
    CHECK_THROWS_AS(parrott_tuple(id, 0.5 * id), InputError);
    CHECK_THROWS_AS(parrott_tuple(id, CMatrix::identity(3)), InputError);
    ParrottOptions relaxed;
    relaxed.require_r2_unitary = false;
    CHECK_NOTHROW(parrott_tuple(id, 0.5 * id, relaxed));
    CHECK_THROWS_AS(parrott_tuple(id, 2.0 * id, relaxed), InputError);
}

TEST_CASE("Parrott tuples from random unitaries validate at 1e-12") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pt = parrott_tuple(random_unitary(3, rng), random_unitary(3, rng));
        CHECK(pt.warnings.empty());
        CHECK_NOTHROW(ContractionTuple(pt.tuple.mats(), Tolerance{1e-12}));
    }
}

TEST_CASE("self-dilation of a unitary tuple and a corrupted embedding") {
    Rng rng(41);
    const ContractionTuple s(random_commuting_unitaries(2, 3, rng), Tolerance{1e-12});
    const DilationCandidate self{s.mats(), CMatrix::identity(3), 4};
    const auto rep = power_dilation_verify(s, self);
    CHECK(rep.pass);
    CHECK(rep.max_deviation < 1e-13);
    CHECK(rep.indices_checked == 25);

    auto r = CMatrix::identity(3);
    r(0, 0) = 0.0;
    const auto bad = power_dilation_verify(s, {s.mats(), r, 2});
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_deviation >= op_norm(s[0]) - 1e-10);
}

TEST_CASE("verification rejects malformed candidates") {
    const ContractionTuple s({CMatrix::identity(2)});
    CHECK_THROWS_AS(power_dilation_verify(s, {{CMatrix::identity(3)}, CMatrix::identity(2), 1}), InputError);
    CHECK_THROWS_AS(power_dilation_verify(s, {{CMatrix::identity(2), CMatrix::identity(2)}, CMatrix::identity(2), 1}),
                    InputError);
    // A non-unitary V is reported, not thrown.
    const auto rep = power_dilation_verify(s, {{0.5 * CMatrix::identity(2)}, CMatrix::identity(2), 1});
    CHECK_FALSE(rep.pass);
    CHECK(rep.unitarity_dev > 0.5);
}

TEST_CASE("Egervary dilation of the zero contraction is a cyclic shift") {
    const auto cand = egervary_dilation(CMatrix::zeros(1, 1), 3);
    REQUIRE(cand.v.size() == 1);
    const auto& v = cand.v[0];
    CHECK(v.rows() == 4);
    CHECK(max_entry_diff(v.adjoint() * v, CMatrix::identity(4)) == 0.0);
    for (unsigned n = 1; n <= 3; ++n) CHECK(std::abs((cand.r.adjoint() * power(v, n) * cand.r)(0, 0)) == 0.0);
}

TEST_CASE("Egervary dilation of a nilpotent and of random contractions") {
    const auto nil = CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const auto rep = power_dilation_verify(ContractionTuple({nil}), egervary_dilation(nil, 4));
    CHECK(rep.pass);
    CHECK(rep.max_deviation <= 1e-10);

    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 1 + trial % 4;
        const auto s = random_contraction(dim, rng, trial % 2 ? 1.0 : 0.7);
        const auto cand = egervary_dilation(s, 6);
        const auto r = power_dilation_verify(ContractionTuple({s}, Tolerance{1e-9}), cand);
        CHECK(r.pass);
        CHECK(r.max_deviation <= 1e-10);
        CHECK(structure_report(cand.v[0]).is_unitary);
    }
    const auto u = random_unitary(3, rng);
    CHECK(power_dilation_verify(ContractionTuple({u}, Tolerance{1e-12}), egervary_dilation(u, 2)).pass);
    CHECK_THROWS_AS(egervary_dilation(2.0 * CMatrix::identity(2), 2), InputError);
}
