#pragma once

#include <string>
#include <vector>

#include "bsi/cmatrix.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/limits.hpp"

namespace bsi {

/// 2x2 elementary matrix with a single 1 at (row, col), 0-based.
CMatrix elementary(std::size_t row, std::size_t col);

struct ParrottOptions {
    // Parrott's original argument only needs R1 unitary and R2 contractive.
    bool require_r2_unitary = true;
    Tolerance tol = Tolerance{1e-12};
};

struct ParrottTuple {
    ContractionTuple tuple;
    std::vector<std::string> warnings;
};

/// (R1 (x) E21, R2 (x) E21, 1 (x) E21) on C^n (x) C^2.
///
/// For non-commuting unitaries R1, R2 this commuting triple admits no power
/// dilation (Parrott, 1970). That is a theorem about the construction; this
/// function only builds the triple and validates its algebraic properties.
/// A commuting pair produces a warning, not an error.
ParrottTuple parrott_tuple(const CMatrix& r1, const CMatrix& r2, const ParrottOptions& opts = ParrottOptions{});

/// Candidate power dilation: commuting unitaries V_i on C^m and an isometry r: C^n -> C^m.
struct DilationCandidate {
    std::vector<CMatrix> v;
    CMatrix r;
    unsigned n_max;
};

struct PowerDilationReport {
    double max_deviation = 0.0;      // max over n of || prod S_i^n_i - r* prod V_i^n_i r ||
    std::vector<unsigned> worst_index;
    double unitarity_dev = 0.0;      // max_i max(||V*V - I||, ||VV* - I||)
    double commutation_dev = 0.0;    // max_{i<j} ||V_i V_j - V_j V_i||
    double isometry_dev = 0.0;       // ||r*r - I||
    std::size_t indices_checked = 0;
    bool pass = false;
};

/// Checks every multi-index in {0..n_max}^d.
PowerDilationReport power_dilation_verify(const ContractionTuple& s, const DilationCandidate& cand,
                                          Tolerance tol = Tolerance{});

/// Egervary-style unitary on (m+1) copies of C^n whose compressed powers reproduce
/// S^k for k <= m. The result is verified before it is returned; a failed
/// verification throws NumericalError.
DilationCandidate egervary_dilation(const CMatrix& s, unsigned m, Tolerance tol = Tolerance{});

}  // namespace bsi
