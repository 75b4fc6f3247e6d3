#pragma once

#include <map>
#include <string>
#include <vector>

#include "bsi/cmatrix.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/limits.hpp"
#include "bsi/torus.hpp"

namespace bsi {

struct StructureReport {
    bool is_contraction = false;
    bool is_isometry = false;
    bool is_unitary = false;
    bool is_projection = false;
    bool is_entrywise_nonneg = false;
    bool preserves_unity = false;
    bool adjoint_preserves_unity = false;
    // Keys: norm_excess, isometry, unitary, hermitian, projection,
    // entrywise_nonneg, unity, adjoint_unity.
    std::map<std::string, double> deviations;
};

/// Measures every operator class on a square matrix. Positivity and unity
/// refer to the canonical basis; the all-ones vector is unnormalised.
StructureReport structure_report(const CMatrix& a, Tolerance tol = Tolerance{});

/// Entrywise nonnegative, A1 = 1 and A*1 = 1, each to tol.
bool bimarkov_check(const CMatrix& a, Tolerance tol = Tolerance{});

struct PreservationRow {
    std::string operator_class;
    bool base_in_class = false;     // every S_i is in the class
    bool preserved = true;          // every evaluated T^(N)(t) is in the class (checked only if base_in_class)
    double max_deviation = 0.0;     // worst deviation over evaluated times, when checked
    bool converse_consistent = true;  // T^(N)(e_i) in class iff S_i in class, for every i
};

struct PreservationReport {
    std::vector<PreservationRow> rows;
    std::size_t times_checked = 0;

    bool ok() const;
};

/// Classes: contraction, isometry, unitary, entrywise_nonneg, unity, adjoint_unity, bimarkov.
PreservationReport preservation_suite(const ContractionTuple& s, std::int64_t n, const std::vector<GridTime>& times,
                                      Tolerance tol = Tolerance{});

}  // namespace bsi
