#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsi/cli.hpp"
#include "bsi/io.hpp"
#include "bsi/linalg.hpp"
#include "bsi/random.hpp"
#include "support.hpp"

using namespace bsi;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bsi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("bsi_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    std::string write(const std::string& name, const io::Json& j) const {
        io::write_text_file(file(name), io::dump(j));
        return file(name);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage and unknown commands exit 2") {
    auto r = run({});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("Usage") != std::string::npos);
    r = run({"frobnicate"});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("unknown command") != std::string::npos);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"bscr", "--N", "0"}).code == kExitInput);
    CHECK(run({"vn-search", "--d", "2", "--dim", "2", "--trials", "3"}).code == kExitInput);  // no seed
}

TEST_CASE("interp check on a random tuple passes and echoes its config") {
    TempDir dir;
    Rng rng(8);
    const auto tuple = dir.write("t.json", io::tuple_to_json(random_commuting_contractions(2, 2, rng)));
    const auto r = run({"interp", "check", "--tuple", tuple, "--N", "3"});
    CHECK(r.code == kExitPass);
    const auto j = io::Json::parse(r.out);
    CHECK(j["command"] == "interp check");
    CHECK(j["config"]["N"] == 3);
    CHECK(j["config"]["max_num"] == 6);
    CHECK(j["config"]["tol"] == 1e-10);
    CHECK(j["pass"] == true);
}

TEST_CASE("interp eval writes the operator") {
    TempDir dir;
    Rng rng(9);
    const auto mats = random_commuting_contractions(2, 2, rng);
    const auto tuple = dir.write("t.json", io::tuple_to_json(mats));
    const auto op = dir.file("op.json");
    auto r = run({"interp", "eval", "--tuple", tuple, "--N", "4", "--t", "4/4,0/4", "--out", op});
    CHECK(r.code == kExitPass);
    const auto m = io::matrix_from_json(io::read_json_file(op));
    CHECK(m.rows() == 32);
    CHECK(test::max_entry_diff(m, kron(CMatrix::identity(16), mats[0])) < 1e-15);
    CHECK(run({"interp", "eval", "--tuple", tuple, "--N", "4", "--t", "1/3,0/3"}).code == kExitInput);
    CHECK(run({"interp", "eval", "--tuple", tuple, "--N", "4", "--t", "1/4"}).code == kExitInput);
    CHECK(run({"interp", "eval", "--tuple", dir.file("missing.json"), "--N", "4", "--t", "1/4,1/4"}).code ==
          kExitInput);
}

TEST_CASE("malformed and non-contractive inputs exit 2") {
    TempDir dir;
    {
        std::ofstream(dir.file("junk.json")) << "{not json";
    }
    CHECK(run({"structure", "--matrix", dir.file("junk.json")}).code == kExitInput);
    const auto big = dir.write("big.json", io::tuple_to_json({2.0 * CMatrix::identity(2)}));
    CHECK(run({"interp", "check", "--tuple", big, "--N", "2"}).code == kExitInput);
}

TEST_CASE("bscr exhaustive check and trace CSV") {
    TempDir dir;
    auto r = run({"bscr", "--N", "8"});
    CHECK(r.code == kExitPass);
    CHECK(io::Json::parse(r.out)["pairs_checked"] == 256);
    const auto csv = dir.file("fig1.csv");
    r = run({"bscr", "--N", "8", "--trace", "3,6", "--out", csv});
    CHECK(r.code == kExitPass);
    const auto text = slurp(csv);
    CHECK(text.rfind("theta,re,im\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
    CHECK(run({"bscr", "--N", "8", "--trace", "3/8,6/8", "--out", dir.file("b.csv")}).code == kExitPass);
    CHECK(slurp(dir.file("b.csv")) == text);
    CHECK(run({"bscr", "--N", "8", "--trace", "3/4,1/4"}).code == kExitInput);
}

TEST_CASE("vn: constant polynomial HOLDS, Crabb-Davie VIOLATED") {
    TempDir dir;
    Rng rng(10);
    const auto tuple = dir.write("t.json", io::tuple_to_json(random_commuting_contractions(2, 3, rng)));
    const auto one = dir.write("one.json", io::to_json(MultiPolynomial::constant(2, 1.0)));
    auto r = run({"vn", "--tuple", tuple, "--poly", one, "--grid", "16"});
    CHECK(r.code == kExitPass);
    CHECK(io::Json::parse(r.out)["verdict"] == "HOLDS");

    const auto report = dir.file("report.json");
    r = run({"vn", "--tuple", test::source_path("data/fixtures/crabb_davie_tuple.json"), "--poly",
             test::source_path("data/fixtures/crabb_davie_poly.json"), "--grid", "256", "--out", report});
    CHECK(r.code == kExitFail);
    const auto j = io::read_json_file(report);
    CHECK(j["verdict"] == "VIOLATED");
    CHECK(j["lhs"].get<double>() > j["sup_upper"].get<double>());
    CHECK(r.out == slurp(report));
}

TEST_CASE("vn-search is byte-for-byte reproducible") {
    const std::vector<std::string> args{"vn-search", "--d", "2", "--dim", "2", "--trials", "20", "--seed", "42",
                                        "--grid", "32"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
    CHECK(io::Json::parse(a.out)["config"]["seed"] == 42);
    auto with = args;
    with[2] = "3";
    with.push_back("--include-crabb-davie");
    CHECK(run(with).code == kExitFail);
    with[2] = "2";
    CHECK(run(with).code == kExitInput);
}

TEST_CASE("parrott, dilate, structure, preserve, approx") {
    TempDir dir;
    const auto r1 = dir.write("r1.json", io::to_json(CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})));
    const auto r2 = dir.write("r2.json", io::to_json(CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})));
    const auto tuple = dir.file("parrott.json");
    auto r = run({"parrott", "--r1", r1, "--r2", r2, "--out", tuple});
    CHECK(r.code == kExitPass);
    CHECK(io::Json::parse(r.out)["max_pairwise_product"] == 0.0);
    CHECK(io::tuple_matrices_from_json(io::read_json_file(tuple)).size() == 3);
    const auto half = dir.write("half.json", io::to_json(0.5 * CMatrix::identity(2)));
    CHECK(run({"parrott", "--r1", r1, "--r2", half}).code == kExitInput);
    CHECK(run({"parrott", "--r1", r1, "--r2", half, "--allow-contractive-r2"}).code == kExitPass);

    const auto s = dir.write("s.json", io::to_json(CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})));
    const auto cand = dir.file("cand.json");
    r = run({"dilate", "--matrix", s, "--m", "6", "--verify", "--out", cand});
    CHECK(r.code == kExitPass);
    CHECK(io::Json::parse(r.out)["verification"]["pass"] == true);
    const auto stuple = dir.write("st.json", io::tuple_to_json({CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})}));
    CHECK(run({"dilate", "--tuple", stuple, "--candidate", cand}).code == kExitPass);
    CHECK(run({"dilate", "--tuple", stuple}).code == kExitInput);

    r = run({"structure", "--matrix", s});
    CHECK(r.code == kExitPass);
    CHECK(io::Json::parse(r.out)["flags"]["is_isometry"] == false);

    CHECK(run({"preserve", "--tuple", tuple, "--N", "2"}).code == kExitPass);

    const auto gens = dir.write("g.json", io::tuple_to_json({CMatrix::from_rows({{-1.0, 0.0}, {0.0, -3.0}}),
                                                             CMatrix::from_rows({{-2.0, 0.0}, {0.0, -1.0}})}));
    const auto sweep = dir.file("sweep.json");
    r = run({"approx", "--generators", gens, "--eps-list", "0.5,0.25,0.125", "--tmax", "2", "--steps", "10", "--out",
             sweep});
    CHECK(r.code == kExitPass);
    const auto rows = io::read_json_file(sweep);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["eps"] == 0.5);
    CHECK(run({"approx", "--generators", gens, "--eps-list", "0.5,-1", "--tmax", "2", "--steps", "10"}).code ==
          kExitInput);
    r = run({"approx", "--generators", gens, "--eps-list", "0.5", "--tmax", "1", "--steps", "4", "--format", "csv",
             "--out", dir.file("sweep.csv")});
    CHECK(slurp(dir.file("sweep.csv")).rfind("eps,sup_error\n", 0) == 0);
}

TEST_CASE("environment overrides are applied and echoed") {
    setenv("BSI_TOL", "1e-8", 1);
    setenv("BSI_MAX_ENTRIES", "4096", 1);
    auto r = run({"bscr", "--N", "4"});
    CHECK(r.code == kExitPass);
    auto j = io::Json::parse(r.out);
    CHECK(j["config"]["tol"] == 1e-8);
    CHECK(j["config"]["max_entries"] == 4096);
    CHECK(run({"bscr", "--N", "100"}).code == kExitInput);
    r = run({"bscr", "--N", "4", "--tol", "1e-6"});
    CHECK(io::Json::parse(r.out)["config"]["tol"] == 1e-6);
    setenv("BSI_TOL", "abc", 1);
    CHECK(run({"bscr", "--N", "4"}).code == kExitInput);
    unsetenv("BSI_TOL");
    unsetenv("BSI_MAX_ENTRIES");
    set_max_matrix_entries(kDefaultMaxEntries);
}
