#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsi/cmatrix.hpp"
#include "bsi/dilation.hpp"
#include "bsi/interpolation.hpp"
#include "bsi/structure.hpp"
#include "bsi/vn.hpp"

namespace bsi::io {

// Insertion-ordered so that reports serialise with a fixed field order.
using Json = nlohmann::ordered_json;

// {"rows":r,"cols":c,"data":[[re,im],...]} row-major.
Json to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// {"d":d,"dim":n,"matrices":[...]}
Json tuple_to_json(const std::vector<CMatrix>& mats);
Json to_json(const ContractionTuple& t);
std::vector<CMatrix> tuple_matrices_from_json(const Json& j);
ContractionTuple tuple_from_json(const Json& j, Tolerance tol = Tolerance{});

// {"d":d,"terms":[{"alpha":[...],"coeff":[re,im]},...]}
Json to_json(const MultiPolynomial& p);
MultiPolynomial poly_from_json(const Json& j);

// {"V":[...],"r":{...},"n_max":m}
Json to_json(const DilationCandidate& c);
DilationCandidate candidate_from_json(const Json& j);

Json to_json(const VnReport& r);
Json to_json(const StructureReport& r);
Json to_json(const PowerDilationReport& r);
Json to_json(const SemigroupLawReport& r);
Json to_json(const PreservationReport& r);
Json to_json(const VnSearchReport& r);
// [{"eps":...,"sup_error":...}]
Json to_json(const std::vector<SweepRow>& rows);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace bsi::io
