#include "bsi/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bsi/errors.hpp"
#include "bsi/linalg.hpp"

namespace bsi {

namespace {

double norm_or_zero(const CMatrix& a) { return a.max_abs() == 0.0 ? 0.0 : op_norm(a); }

double unity_defect(const CMatrix& a) {
    const std::vector<cplx> ones(a.cols(), cplx{1.0});
    auto y = bsi::apply(a, ones);
    double acc = 0.0;
    for (auto& v : y) acc += std::norm(v - 1.0);
    return std::sqrt(acc);
}

double nonneg_defect(const CMatrix& a) {
    double worst = 0.0;
    for (const auto& v : a.data()) worst = std::max({worst, -v.real(), std::abs(v.imag())});
    return worst;
}

// Returns {in_class, deviation} for one named class.
std::pair<bool, double> classify(const std::string& cls, const StructureReport& r) {
    if (cls == "contraction") return {r.is_contraction, r.deviations.at("norm_excess")};
    if (cls == "isometry") return {r.is_isometry, r.deviations.at("isometry")};
    if (cls == "unitary") return {r.is_unitary, r.deviations.at("unitary")};
    if (cls == "entrywise_nonneg") return {r.is_entrywise_nonneg, r.deviations.at("entrywise_nonneg")};
    if (cls == "unity") return {r.preserves_unity, r.deviations.at("unity")};
    if (cls == "adjoint_unity") return {r.adjoint_preserves_unity, r.deviations.at("adjoint_unity")};
    if (cls == "bimarkov") {
        const double dev = std::max({r.deviations.at("entrywise_nonneg"), r.deviations.at("unity"),
                                     r.deviations.at("adjoint_unity")});
        return {r.is_entrywise_nonneg && r.preserves_unity && r.adjoint_preserves_unity, dev};
    }
    throw InputError("unknown operator class '" + cls + "'");
}

}  // namespace

StructureReport structure_report(const CMatrix& a, Tolerance tol) {
    if (!a.is_square()) {
        throw InputError("structure_report: matrix must be square, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    }
    const std::size_t n = a.rows();
    const CMatrix id = CMatrix::identity(n);
    const CMatrix adj = a.adjoint();
    StructureReport r;

    const double nrm = op_norm(a);
    const double iso = norm_or_zero(adj * a - id);
    const double co_iso = norm_or_zero(a * adj - id);
    const double herm = norm_or_zero(a - adj);
    const double idem = norm_or_zero(a * a - a);

    r.deviations["norm_excess"] = std::max(0.0, nrm - 1.0);
    r.deviations["isometry"] = iso;
    r.deviations["unitary"] = std::max(iso, co_iso);
    r.deviations["hermitian"] = herm;
    r.deviations["projection"] = std::max(idem, herm);
    r.deviations["entrywise_nonneg"] = nonneg_defect(a);
    r.deviations["unity"] = unity_defect(a);
    r.deviations["adjoint_unity"] = unity_defect(adj);

    r.is_unitary = r.deviations["unitary"] <= tol.eps;
    r.is_isometry = r.is_unitary || iso <= tol.eps;
    // ||A*A - I|| <= tol forces ||A|| <= sqrt(1 + tol); the flag follows it.
    r.is_contraction = r.is_isometry || nrm <= 1.0 + tol.eps;
    r.is_projection = r.deviations["projection"] <= tol.eps;
    r.is_entrywise_nonneg = r.deviations["entrywise_nonneg"] <= tol.eps;
    r.preserves_unity = r.deviations["unity"] <= tol.eps;
    r.adjoint_preserves_unity = r.deviations["adjoint_unity"] <= tol.eps;
    return r;
}

bool bimarkov_check(const CMatrix& a, Tolerance tol) {
    if (!a.is_square()) throw InputError("bimarkov_check: matrix must be square");
    return nonneg_defect(a) <= tol.eps && unity_defect(a) <= tol.eps && unity_defect(a.adjoint()) <= tol.eps;
}

bool PreservationReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const PreservationRow& r) {
        return (!r.base_in_class || r.preserved) && r.converse_consistent;
    });
}

PreservationReport preservation_suite(const ContractionTuple& s, std::int64_t n, const std::vector<GridTime>& times,
                                      Tolerance tol) {
    static const std::array<std::string, 7> classes{"contraction", "isometry",      "unitary", "entrywise_nonneg",
                                                    "unity",       "adjoint_unity", "bimarkov"};
    const DiscretizedSemigroup sg(s, n);
    PreservationReport rep;
    rep.times_checked = times.size();

    std::vector<StructureReport> evals;
    evals.reserve(times.size());
    for (const auto& t : times) evals.push_back(structure_report(eval_discretized(sg, t), tol));
    std::vector<StructureReport> base_reports, axis_reports;
    for (std::size_t i = 0; i < s.d(); ++i) {
        base_reports.push_back(structure_report(s[i], tol));
        axis_reports.push_back(structure_report(eval_discretized(sg, GridTime::axis_integer(n, s.d(), i, 1)), tol));
    }

    for (const auto& cls : classes) {
        PreservationRow row;
        row.operator_class = cls;
        row.base_in_class = true;
        for (std::size_t i = 0; i < s.d(); ++i) {
            const bool base_member = classify(cls, base_reports[i]).first;
            const bool lifted_member = classify(cls, axis_reports[i]).first;
            row.base_in_class = row.base_in_class && base_member;
            row.converse_consistent = row.converse_consistent && (base_member == lifted_member);
        }
        if (row.base_in_class) {
            for (const auto& e : evals) {
                const auto [member, dev] = classify(cls, e);
                row.preserved = row.preserved && member;
                row.max_deviation = std::max(row.max_deviation, dev);
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace bsi
