#include "bsi/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bsi/dilation.hpp"
#include "bsi/errors.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/io.hpp"
#include "bsi/linalg.hpp"
#include "bsi/structure.hpp"
#include "bsi/torus.hpp"
#include "bsi/vn.hpp"

namespace bsi {

namespace {

using io::Json;

constexpr const char* kEnvTol = "BSI_TOL";
constexpr const char* kEnvMaxEntries = "BSI_MAX_ENTRIES";
constexpr const char* kEnvMaxTorusPoints = "BSI_MAX_TORUS_POINTS";

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
}

std::size_t parse_env_size(const char* name, const std::string& text) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0) {
        throw InputError(std::string(name) + " must be a positive integer, got '" + text + "'");
    }
    return v;
}

double parse_env_double(const char* name, const std::string& text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(v >= 0.0)) {
        throw InputError(std::string(name) + " must be a nonnegative number, got '" + text + "'");
    }
    return v;
}

// Options shared by every subcommand.
struct Common {
    std::optional<double> tol;
    std::string out;
};

struct Resolved {
    Tolerance tol;
    std::size_t max_entries;
    std::size_t max_torus_points;
};

Resolved resolve(const Common& c) {
    Resolved r{Tolerance{kDefaultTol}, kDefaultMaxEntries, kDefaultMaxTorusPoints};
    if (auto v = env(kEnvTol)) r.tol = Tolerance{parse_env_double(kEnvTol, *v)};
    if (c.tol) r.tol = Tolerance{*c.tol};
    if (auto v = env(kEnvMaxEntries)) r.max_entries = parse_env_size(kEnvMaxEntries, *v);
    if (auto v = env(kEnvMaxTorusPoints)) r.max_torus_points = parse_env_size(kEnvMaxTorusPoints, *v);
    set_max_matrix_entries(r.max_entries);
    set_max_torus_points(r.max_torus_points);
    return r;
}

Json resolved_json(const Resolved& r) {
    return Json{{"tol", r.tol.eps}, {"max_entries", r.max_entries}, {"max_torus_points", r.max_torus_points}};
}

// Report with the resolved config first, then the command's results.
Json report(const std::string& command, Json config, const Resolved& r, const Json& results) {
    config.update(resolved_json(r));
    Json out{{"command", command}, {"config", std::move(config)}};
    for (auto it = results.begin(); it != results.end(); ++it) out[it.key()] = it.value();
    return out;
}

void emit(std::ostream& out, const Json& rep, const std::string& path) {
    const std::string text = io::dump(rep);
    if (!path.empty()) io::write_text_file(path, text);
    out << text;
}

void check_grid_time(const GridTime& t, std::int64_t n, std::size_t d) {
    if (t.denom() != n) {
        throw InputError("time '" + t.to_string() + "' has denominator " + std::to_string(t.denom()) +
                         " but --N is " + std::to_string(n));
    }
    if (t.dim() != d) {
        throw InputError("time '" + t.to_string() + "' has " + std::to_string(t.dim()) + " coordinates, tuple has d = " +
                         std::to_string(d));
    }
}

// "s,t" as numerators or as "k/N" fractions over the --N denominator.
std::pair<std::int64_t, std::int64_t> parse_trace(const std::string& text, std::int64_t n) {
    if (text.find('/') != std::string::npos) {
        const GridTime g = GridTime::parse(text);
        check_grid_time(g, n, 2);
        return {g.num(0), g.num(1)};
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("--trace expects 's,t', got '" + text + "'");
    auto parse = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0 || s.empty()) {
            throw InputError("--trace expects nonnegative integer numerators, got '" + text + "'");
        }
        return v;
    };
    const std::string_view sv(text);
    return {parse(sv.substr(0, comma)), parse(sv.substr(comma + 1))};
}

std::string csv_sweep(const std::vector<SweepRow>& rows) {
    std::string s = "eps,sup_error\n";
    for (const auto& r : rows) s += Json(r.eps).dump() + "," + Json(r.sup_error).dump() + "\n";
    return s;
}

std::string csv_structure(const StructureReport& r) {
    std::string s = "quantity,value\n";
    for (const auto& [k, v] : r.deviations) s += k + "," + Json(v).dump() + "\n";
    return s;
}

using Handler = std::function<int(std::ostream&)>;

void add_common(CLI::App* sub, Common& c, bool with_out = true) {
    sub->add_option("--tol", c.tol, "Absolute tolerance (default $BSI_TOL or 1e-10)")->check(CLI::NonNegativeNumber);
    if (with_out) sub->add_option("--out", c.out, "Write the artifact to this path");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discretised multi-parameter interpolation of commuting contractions: verification tools", "bsi"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    app.footer(std::string("Environment: ") + kEnvTol + " (default tol), " + kEnvMaxEntries +
               " (matrix entry cap, default 1048576), " + kEnvMaxTorusPoints +
               " (torus grid cap, default 67108864).\nExit codes: 0 pass/HOLDS, 1 check failed/VIOLATED, "
               "2 input error, 3 numerical error.");

    Common common;
    Handler handler;

    // interp eval / interp check
    auto* interp = app.add_subcommand("interp", "Evaluate or check the discretised semigroup T^(N)");
    interp->require_subcommand(1);
    std::string tuple_path;
    std::int64_t n = 0;
    std::string t_text;
    std::int64_t max_num = 0;

    auto* ieval = interp->add_subcommand("eval", "Evaluate T^(N)(t) at a grid time");
    ieval->add_option("--tuple", tuple_path, "Tuple JSON")->required()->check(CLI::ExistingFile);
    ieval->add_option("--N", n, "Grid denominator")->required()->check(CLI::PositiveNumber);
    ieval->add_option("--t", t_text, "Grid time k1/N,...,kd/N")->required();
    add_common(ieval, common);
    ieval->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            const ContractionTuple s = io::tuple_from_json(io::read_json_file(tuple_path), r.tol);
            const GridTime t = GridTime::parse(t_text);
            check_grid_time(t, n, s.d());
            const DiscretizedSemigroup sg(s, n);
            const CMatrix op = eval_discretized(sg, t);
            Json cfg{{"tuple", tuple_path}, {"N", n}, {"t", t.to_string()}, {"out", common.out}};
            Json res{{"d", s.d()}, {"dim", s.dim()}, {"total_dim", sg.total_dim()}, {"op_norm", op_norm(op)}};
            if (!common.out.empty()) {
                io::write_text_file(common.out, io::dump(io::to_json(op)));
            } else {
                res["operator"] = io::to_json(op);
            }
            os << io::dump(report("interp eval", std::move(cfg), r, res));
            return kExitPass;
        };
    });

    auto* icheck = interp->add_subcommand("check", "Property suite for T^(N)");
    icheck->add_option("--tuple", tuple_path, "Tuple JSON")->required()->check(CLI::ExistingFile);
    icheck->add_option("--N", n, "Grid denominator")->required()->check(CLI::PositiveNumber);
    icheck->add_option("--max-num", max_num, "Numerators range over [0, max-num) (default 2N)")
        ->check(CLI::PositiveNumber);
    add_common(icheck, common);
    icheck->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            const ContractionTuple s = io::tuple_from_json(io::read_json_file(tuple_path), r.tol);
            const std::int64_t mn = max_num > 0 ? max_num : 2 * n;
            const DiscretizedSemigroup sg(s, n);
            const SemigroupLawReport laws = check_semigroup_laws(sg, mn);
            Json cfg{{"tuple", tuple_path}, {"N", n}, {"max_num", mn}, {"out", common.out}};
            emit(os, report("interp check", std::move(cfg), r, io::to_json(laws)), common.out);
            return laws.all_ok() ? kExitPass : kExitFail;
        };
    });

    // bscr
    std::string trace;
    std::string format;
    auto* bscr = app.add_subcommand("bscr", "Exhaustive check of the projection/rotation commutation relation");
    bscr->add_option("--N", n, "Grid size")->required()->check(CLI::PositiveNumber);
    bscr->add_option("--trace", trace, "Also sample U(t)* P(s) U(t) 1 at s,t (numerators or k/N fractions)");
    bscr->add_option("--format", format, "Trace format")->check(CLI::IsMember({"csv", "json"}));
    add_common(bscr, common);
    bscr->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            check_entry_budget(static_cast<std::size_t>(n), static_cast<std::size_t>(n), "bscr operators");
            double worst = 0.0;
            std::size_t pairs = 0, nonzero = 0;
            for (std::int64_t s = 0; s < 2 * n; ++s) {
                for (std::int64_t t = 0; t < 2 * n; ++t) {
                    const double dev = bscr_check(n, s, t);
                    worst = std::max(worst, dev);
                    nonzero += dev != 0.0;
                    ++pairs;
                }
            }
            Json cfg{{"N", n}, {"trace", trace}, {"format", format.empty() ? "csv" : format}, {"out", common.out}};
            Json res{{"pass", nonzero == 0}, {"pairs_checked", pairs}, {"nonzero_pairs", nonzero}, {"max_deviation", worst}};
            if (!trace.empty()) {
                const auto [s, t] = parse_trace(trace, n);
                const auto rows = bscr_trace(n, s, t, std::vector<cplx>(static_cast<std::size_t>(n), cplx{1.0}));
                std::string text;
                if (format == "json") {
                    Json arr = Json::array();
                    for (const auto& p : rows) arr.push_back(Json{{"theta", p.theta}, {"re", p.value.real()}, {"im", p.value.imag()}});
                    text = io::dump(arr);
                } else {
                    text = trace_to_csv(rows);
                }
                if (!common.out.empty()) {
                    io::write_text_file(common.out, text);
                } else {
                    res["trace"] = text;
                }
            }
            os << io::dump(report("bscr", std::move(cfg), r, res));
            return nonzero == 0 ? kExitPass : kExitFail;
        };
    });

    // parrott
    std::string r1_path, r2_path;
    bool allow_contractive_r2 = false;
    auto* parrott = app.add_subcommand("parrott", "Build the commuting triple (R1 x E21, R2 x E21, 1 x E21)");
    parrott->add_option("--r1", r1_path, "Unitary R1 matrix JSON")->required()->check(CLI::ExistingFile);
    parrott->add_option("--r2", r2_path, "R2 matrix JSON")->required()->check(CLI::ExistingFile);
    parrott->add_flag("--allow-contractive-r2", allow_contractive_r2, "Only require R2 to be a contraction");
    add_common(parrott, common);
    parrott->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            ParrottOptions opts;
            opts.require_r2_unitary = !allow_contractive_r2;
            if (common.tol) opts.tol = r.tol;
            const ParrottTuple pt = parrott_tuple(io::matrix_from_json(io::read_json_file(r1_path)),
                                                  io::matrix_from_json(io::read_json_file(r2_path)), opts);
            double products = 0.0;
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) products = std::max(products, (pt.tuple[i] * pt.tuple[j]).max_abs());
            }
            Json cfg{{"r1", r1_path}, {"r2", r2_path}, {"require_r2_unitary", opts.require_r2_unitary},
                     {"parrott_tol", opts.tol.eps}, {"out", common.out}};
            Json res{{"d", pt.tuple.d()},
                     {"dim", pt.tuple.dim()},
                     {"max_norm", pt.tuple.max_norm()},
                     {"max_commutator", pt.tuple.max_commutator()},
                     {"max_pairwise_product", products},
                     {"warnings", pt.warnings}};
            if (!common.out.empty()) {
                io::write_text_file(common.out, io::dump(io::to_json(pt.tuple)));
            } else {
                res["tuple"] = io::to_json(pt.tuple);
            }
            os << io::dump(report("parrott", std::move(cfg), r, res));
            return kExitPass;
        };
    });

    // vn
    std::string poly_path;
    std::int64_t grid = 0;
    int refinements = 0;
    auto* vn = app.add_subcommand("vn", "Certify the von Neumann inequality for one tuple and polynomial");
    vn->add_option("--tuple", tuple_path, "Tuple JSON")->required()->check(CLI::ExistingFile);
    vn->add_option("--poly", poly_path, "Polynomial JSON")->required()->check(CLI::ExistingFile);
    vn->add_option("--grid", grid, "Torus grid size M per axis (default 256)")->check(CLI::Range(2, 1 << 26));
    vn->add_option("--refine", refinements, "Double M up to this many times while INCONCLUSIVE (default 0)")
        ->check(CLI::Range(0, 16));
    add_common(vn, common);
    vn->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            const ContractionTuple s = io::tuple_from_json(io::read_json_file(tuple_path), r.tol);
            const MultiPolynomial p = io::poly_from_json(io::read_json_file(poly_path));
            std::int64_t m = grid > 0 ? grid : 256;
            VnReport rep = vn_check(s, p, m, r.tol);
            for (int i = 0; i < refinements && rep.verdict == Verdict::Inconclusive; ++i) {
                std::size_t pts = 0;
                if (!checked_pow(static_cast<std::size_t>(2 * m), s.d(), max_torus_points(), pts)) break;
                m *= 2;
                rep = vn_check(s, p, m, r.tol);
            }
            Json cfg{{"tuple", tuple_path}, {"poly", poly_path}, {"grid", grid > 0 ? grid : 256},
                     {"refine", refinements}, {"out", common.out}};
            Json res = io::to_json(rep);
            res["final_grid"] = m;
            emit(os, report("vn", std::move(cfg), r, res), common.out);
            return rep.verdict == Verdict::Holds ? kExitPass : kExitFail;
        };
    });

    // vn-search
    std::size_t d = 0, dim = 0, trials = 0;
    std::uint64_t seed = 0;
    bool crabb_davie = false;
    int max_refinements = VnSearchOptions{}.max_refinements;
    auto* vns = app.add_subcommand("vn-search", "Randomised search for von Neumann inequality violations");
    vns->add_option("--d", d, "Number of commuting contractions")->required()->check(CLI::Range(1, 8));
    vns->add_option("--dim", dim, "Matrix dimension")->required()->check(CLI::Range(1, 64));
    vns->add_option("--trials", trials, "Random trials")->required()->check(CLI::NonNegativeNumber);
    vns->add_option("--seed", seed, "Seed (trial i uses seed + i)")->required();
    vns->add_option("--grid", grid, "Torus grid size M per axis (default 64)")->check(CLI::Range(2, 1 << 26));
    vns->add_option("--refine", max_refinements, "Grid doublings for INCONCLUSIVE trials")->check(CLI::Range(0, 16));
    vns->add_flag("--include-crabb-davie", crabb_davie, "Append the shipped d=3 counterexample to the pool");
    add_common(vns, common);
    vns->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            std::vector<VnFixture> fixtures;
            if (crabb_davie) {
                if (d != 3) throw InputError("--include-crabb-davie requires --d 3");
                fixtures.push_back(crabb_davie_fixture());
            }
            VnSearchOptions opts;
            opts.max_refinements = max_refinements;
            opts.tol = r.tol;
            const std::int64_t m = grid > 0 ? grid : 64;
            const VnSearchReport rep = vn_search(d, dim, trials, seed, m, fixtures, opts);
            Json cfg{{"d", d}, {"dim", dim}, {"trials", trials}, {"seed", seed}, {"grid", m},
                     {"refine", max_refinements}, {"include_crabb_davie", crabb_davie}, {"out", common.out}};
            emit(os, report("vn-search", std::move(cfg), r, io::to_json(rep)), common.out);
            return rep.violations.empty() ? kExitPass : kExitFail;
        };
    });

    // dilate
    std::string matrix_path, candidate_path;
    unsigned m_steps = 6;
    bool verify = false;
    auto* dilate = app.add_subcommand("dilate", "Power dilations: Egervary construction or candidate verification");
    dilate->add_option("--matrix", matrix_path, "Contraction S (Egervary mode)")->check(CLI::ExistingFile);
    dilate->add_option("--m", m_steps, "Reproduce S^k for k <= m (default 6)")->check(CLI::Range(0, 64));
    dilate->add_flag("--verify", verify, "Verify the power dilation for every k <= m");
    dilate->add_option("--tuple", tuple_path, "Tuple JSON (candidate mode)")->check(CLI::ExistingFile);
    dilate->add_option("--candidate", candidate_path, "DilationCandidate JSON (candidate mode)")->check(CLI::ExistingFile);
    add_common(dilate, common);
    dilate->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            if (!candidate_path.empty() || !tuple_path.empty()) {
                if (candidate_path.empty() || tuple_path.empty() || !matrix_path.empty()) {
                    throw InputError("candidate mode needs --tuple and --candidate, and no --matrix");
                }
                const ContractionTuple s = io::tuple_from_json(io::read_json_file(tuple_path), r.tol);
                const DilationCandidate cand = io::candidate_from_json(io::read_json_file(candidate_path));
                const PowerDilationReport rep = power_dilation_verify(s, cand, r.tol);
                Json cfg{{"tuple", tuple_path}, {"candidate", candidate_path}, {"out", common.out}};
                emit(os, report("dilate", std::move(cfg), r, io::to_json(rep)), common.out);
                return rep.pass ? kExitPass : kExitFail;
            }
            if (matrix_path.empty()) throw InputError("dilate needs --matrix, or --tuple with --candidate");
            const CMatrix s = io::matrix_from_json(io::read_json_file(matrix_path));
            const DilationCandidate cand = egervary_dilation(s, m_steps, r.tol);
            Json cfg{{"matrix", matrix_path}, {"m", m_steps}, {"verify", verify}, {"out", common.out}};
            Json res{{"dilation_dim", cand.r.rows()}};
            bool pass = true;
            if (verify) {
                const PowerDilationReport rep = power_dilation_verify(ContractionTuple({s}, r.tol), cand, r.tol);
                res["verification"] = io::to_json(rep);
                pass = rep.pass;
            }
            if (!common.out.empty()) {
                io::write_text_file(common.out, io::dump(io::to_json(cand)));
            } else {
                res["candidate"] = io::to_json(cand);
            }
            os << io::dump(report("dilate", std::move(cfg), r, res));
            return pass ? kExitPass : kExitFail;
        };
    });

    // approx
    std::string generators_path;
    std::vector<double> eps_list;
    double tmax = 0.0;
    int steps = 0;
    auto* approx = app.add_subcommand("approx", "Approximation error of eps-scaled blends of exp(sum t_i A_i)");
    approx->add_option("--generators", generators_path, "Generators A_i as tuple JSON")->required()->check(CLI::ExistingFile);
    approx->add_option("--eps-list", eps_list, "Comma-separated step sizes")->required()->delimiter(',')->check(
        CLI::PositiveNumber);
    approx->add_option("--tmax", tmax, "Time cube [0, tmax]^d")->required()->check(CLI::PositiveNumber);
    approx->add_option("--steps", steps, "Grid intervals per axis")->required()->check(CLI::Range(1, 10000));
    approx->add_option("--format", format, "Sweep format (default json)")->check(CLI::IsMember({"csv", "json"}));
    add_common(approx, common);
    approx->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            const auto gens = io::tuple_matrices_from_json(io::read_json_file(generators_path));
            const auto rows = approx_error_sweep(gens, eps_list, cube_time_grid(gens.size(), tmax, steps), r.tol);
            Json cfg{{"generators", generators_path}, {"eps_list", eps_list}, {"tmax", tmax}, {"steps", steps},
                     {"format", format.empty() ? "json" : format}, {"out", common.out}};
            if (!common.out.empty()) io::write_text_file(common.out, format == "csv" ? csv_sweep(rows) : io::dump(io::to_json(rows)));
            os << io::dump(report("approx", std::move(cfg), r, Json{{"sweep", io::to_json(rows)}}));
            return kExitPass;
        };
    });

    // structure
    auto* structure = app.add_subcommand("structure", "Operator-class flags and deviations of one matrix");
    structure->add_option("--matrix", matrix_path, "Square matrix JSON")->required()->check(CLI::ExistingFile);
    structure->add_option("--format", format, "Artifact format (default json)")->check(CLI::IsMember({"csv", "json"}));
    add_common(structure, common);
    structure->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            const StructureReport rep = structure_report(io::matrix_from_json(io::read_json_file(matrix_path)), r.tol);
            Json cfg{{"matrix", matrix_path}, {"format", format.empty() ? "json" : format}, {"out", common.out}};
            const Json full = report("structure", std::move(cfg), r, io::to_json(rep));
            if (!common.out.empty()) io::write_text_file(common.out, format == "csv" ? csv_structure(rep) : io::dump(full));
            os << io::dump(full);
            return kExitPass;
        };
    });

    // preserve
    auto* preserve = app.add_subcommand("preserve", "Structure preservation suite for T^(N)");
    preserve->add_option("--tuple", tuple_path, "Tuple JSON")->required()->check(CLI::ExistingFile);
    preserve->add_option("--N", n, "Grid denominator")->required()->check(CLI::PositiveNumber);
    preserve->add_option("--max-num", max_num, "Numerators range over [0, max-num) (default 2N)")
        ->check(CLI::PositiveNumber);
    add_common(preserve, common);
    preserve->callback([&] {
        handler = [&](std::ostream& os) {
            const Resolved r = resolve(common);
            const ContractionTuple s = io::tuple_from_json(io::read_json_file(tuple_path), r.tol);
            const std::int64_t mn = max_num > 0 ? max_num : 2 * n;
            const PreservationReport rep = preservation_suite(s, n, grid_times(n, s.d(), mn), r.tol);
            Json cfg{{"tuple", tuple_path}, {"N", n}, {"max_num", mn}, {"out", common.out}};
            emit(os, report("preserve", std::move(cfg), r, io::to_json(rep)), common.out);
            return rep.ok() ? kExitPass : kExitFail;
        };
    });

    if (argc > 1 && argv[1][0] != '-') {
        const std::string name = argv[1];
        bool known = false;
        for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == name;
        if (!known) {
            err << "unknown command '" << name << "'\n" << app.help();
            return kExitInput;
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInput;
    }
    if (!handler) {
        err << app.help();
        return kExitInput;
    }
    try {
        return handler(out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::bad_alloc&) {
        err << "numerical error: out of memory; lower the sizes or " << kEnvMaxEntries << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace bsi
