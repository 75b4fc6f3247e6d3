#include "bsi/io.hpp"

#include <fstream>
#include <sstream>

#include "bsi/errors.hpp"

namespace bsi::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

std::size_t positive_size(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw InputError(std::string(what) + ": field '" + key + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

cplx complex_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError(std::string(what) + ": complex entries must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(cplx c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Json to_json(const CMatrix& m) {
    Json data = Json::array();
    for (const auto& v : m.data()) data.push_back(complex_to_json(v));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = positive_size(j, "rows", "matrix");
    const std::size_t cols = positive_size(j, "cols", "matrix");
    const Json& data = field(j, "data", "matrix");
    if (!data.is_array()) throw InputError("matrix: 'data' must be an array");
    check_entry_budget(rows, cols, "matrix");
    if (data.size() != rows * cols) {
        throw InputError("matrix: 'data' has " + std::to_string(data.size()) + " entries, expected " +
                         std::to_string(rows * cols));
    }
    std::vector<cplx> values;
    values.reserve(data.size());
    for (const auto& e : data) values.push_back(complex_from_json(e, "matrix"));
    return CMatrix(rows, cols, std::move(values));
}

Json tuple_to_json(const std::vector<CMatrix>& mats) {
    Json arr = Json::array();
    for (const auto& m : mats) arr.push_back(to_json(m));
    return Json{{"d", mats.size()}, {"dim", mats.empty() ? 0 : mats.front().rows()}, {"matrices", std::move(arr)}};
}

Json to_json(const ContractionTuple& t) { return tuple_to_json(t.mats()); }

std::vector<CMatrix> tuple_matrices_from_json(const Json& j) {
    const std::size_t d = positive_size(j, "d", "tuple");
    const std::size_t dim = positive_size(j, "dim", "tuple");
    const Json& arr = field(j, "matrices", "tuple");
    if (!arr.is_array() || arr.size() != d) {
        throw InputError("tuple: 'matrices' must be an array of d = " + std::to_string(d) + " matrices");
    }
    std::vector<CMatrix> mats;
    for (const auto& m : arr) {
        mats.push_back(matrix_from_json(m));
        if (mats.back().rows() != dim || mats.back().cols() != dim) {
            throw InputError("tuple: every matrix must be dim x dim = " + std::to_string(dim) + "x" + std::to_string(dim));
        }
    }
    return mats;
}

ContractionTuple tuple_from_json(const Json& j, Tolerance tol) { return ContractionTuple(tuple_matrices_from_json(j), tol); }

Json to_json(const MultiPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : p.terms()) terms.push_back(Json{{"alpha", alpha}, {"coeff", complex_to_json(c)}});
    return Json{{"d", p.d()}, {"terms", std::move(terms)}};
}

MultiPolynomial poly_from_json(const Json& j) {
    const std::size_t d = positive_size(j, "d", "polynomial");
    const Json& terms = field(j, "terms", "polynomial");
    if (!terms.is_array()) throw InputError("polynomial: 'terms' must be an array");
    MultiPolynomial p(d);
    for (const auto& t : terms) {
        const Json& alpha = field(t, "alpha", "polynomial term");
        if (!alpha.is_array()) throw InputError("polynomial term: 'alpha' must be an array");
        Exponent e;
        for (const auto& a : alpha) {
            if (!a.is_number_integer() || a.get<std::int64_t>() < 0) {
                throw InputError("polynomial term: exponents must be nonnegative integers");
            }
            e.push_back(a.get<unsigned>());
        }
        p.add_term(e, complex_from_json(field(t, "coeff", "polynomial term"), "polynomial term"));
    }
    return p;
}

Json to_json(const DilationCandidate& c) {
    Json vs = Json::array();
    for (const auto& v : c.v) vs.push_back(to_json(v));
    return Json{{"V", std::move(vs)}, {"r", to_json(c.r)}, {"n_max", c.n_max}};
}

DilationCandidate candidate_from_json(const Json& j) {
    const Json& vs = field(j, "V", "dilation candidate");
    if (!vs.is_array() || vs.empty()) throw InputError("dilation candidate: 'V' must be a non-empty array");
    std::vector<CMatrix> v;
    for (const auto& m : vs) v.push_back(matrix_from_json(m));
    const Json& nmax = field(j, "n_max", "dilation candidate");
    if (!nmax.is_number_integer() || nmax.get<std::int64_t>() < 0) {
        throw InputError("dilation candidate: 'n_max' must be a nonnegative integer");
    }
    return {std::move(v), matrix_from_json(field(j, "r", "dilation candidate")), nmax.get<unsigned>()};
}

Json to_json(const VnReport& r) {
    return Json{{"lhs", r.lhs},
                {"grid_sup", r.grid_sup},
                {"lipschitz_pad", r.lipschitz_pad},
                {"sup_upper", r.sup_upper},
                {"verdict", to_string(r.verdict)}};
}

Json to_json(const StructureReport& r) {
    Json flags{{"is_contraction", r.is_contraction},
               {"is_isometry", r.is_isometry},
               {"is_unitary", r.is_unitary},
               {"is_projection", r.is_projection},
               {"is_entrywise_nonneg", r.is_entrywise_nonneg},
               {"preserves_unity", r.preserves_unity},
               {"adjoint_preserves_unity", r.adjoint_preserves_unity}};
    Json dev = Json::object();
    for (const auto& [k, v] : r.deviations) dev[k] = v;
    return Json{{"flags", std::move(flags)}, {"deviations", std::move(dev)}};
}

Json to_json(const PowerDilationReport& r) {
    return Json{{"pass", r.pass},
                {"max_deviation", r.max_deviation},
                {"worst_index", r.worst_index},
                {"unitarity_dev", r.unitarity_dev},
                {"commutation_dev", r.commutation_dev},
                {"isometry_dev", r.isometry_dev},
                {"indices_checked", r.indices_checked}};
}

Json to_json(const SemigroupLawReport& r) {
    return Json{{"pass", r.all_ok()},
                {"times_checked", r.times_checked},
                {"pairs_checked", r.pairs_checked},
                {"homomorphism", {{"ok", r.homomorphism_ok}, {"deviation", r.homomorphism_dev}}},
                {"commutation", {{"ok", r.commutation_ok}, {"deviation", r.commutation_dev}}},
                {"contractivity", {{"ok", r.contractivity_ok}, {"max_norm", r.max_norm}}},
                {"interpolation", {{"ok", r.interpolation_ok}, {"deviation", r.interpolation_dev}}},
                {"compression", {{"ok", r.compression_ok}, {"deviation", r.compression_dev}}}};
}

Json to_json(const PreservationReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"class", row.operator_class},
                            {"base_in_class", row.base_in_class},
                            {"preserved", row.preserved},
                            {"max_deviation", row.max_deviation},
                            {"converse_consistent", row.converse_consistent}});
    }
    return Json{{"pass", r.ok()}, {"times_checked", r.times_checked}, {"classes", std::move(rows)}};
}

Json to_json(const VnSearchReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back(Json{{"trial", v.trial},
                                  {"source", v.source},
                                  {"grid", v.grid},
                                  {"report", to_json(v.report)},
                                  {"tuple", to_json(v.tuple)},
                                  {"poly", to_json(v.poly)}});
    }
    return Json{{"d", r.d},
                {"dim", r.dim},
                {"trials", r.trials},
                {"random_trials", r.random_trials},
                {"fixture_trials", r.fixture_trials},
                {"seed", r.seed},
                {"grid", r.grid},
                {"holds", r.holds},
                {"inconclusive", r.inconclusive},
                {"violations_found", r.violations.size()},
                {"max_ratio", r.max_ratio},
                {"max_certified_ratio", r.max_certified_ratio},
                {"violations", std::move(violations)}};
}

Json to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(Json{{"eps", r.eps}, {"sup_error", r.sup_error}});
    return arr;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw InputError("write to '" + path.string() + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bsi::io
