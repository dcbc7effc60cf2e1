#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sposet/charfn.hpp"
#include "sposet/check.hpp"
#include "sposet/classify.hpp"
#include "sposet/coefficients.hpp"
#include "sposet/facevec.hpp"
#include "sposet/homology.hpp"
#include "sposet/poset.hpp"
#include "sposet/spectral.hpp"

namespace sposet::io {

using json = nlohmann::ordered_json;

/// Decoded quotient input (cone-v1 or manifold-v1).
struct Bundle {
  QuotientKind kind = QuotientKind::Cone;
  SimplicialPoset poset;
  std::string poset_ref;  // corpus name, or empty when given inline
  int n = 0;
  Coefficients coeff = Coefficients::rationals();
  std::optional<CharFunction> charfn;
  std::optional<ManifoldData> manifold;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

using Document = std::variant<SimplicialPoset, CharFunction, Bundle>;

/// Dispatches on the "format" tag. Throws UnknownFormat, SchemaViolation and
/// the validation errors of the decoded object.
Document parse(const json& doc);
Document parse_text(std::string_view text);
Document parse_file(const std::filesystem::path& path);

SimplicialPoset poset_from_json(const json& doc);
/// sposet-v1, including "n".
json poset_to_json(const SimplicialPoset& s, std::string_view name);
/// scomplex-v1; only meaningful for posets that are simplicial complexes.
json complex_to_json(const SimplicialPoset& s);

CharFunction charfn_from_json(const json& doc);
json charfn_to_json(const CharFunction& lambda);

Bundle bundle_from_json(const json& doc);
json bundle_to_json(const Bundle& b);
QuotientProblem to_problem(const Bundle& b);

json betti_to_json(const BettiVector& b);
json classification_to_json(const SimplicialPoset& s, const Classification& c);
json face_vectors_to_json(const FaceVectorReport& r);
json checks_to_json(const std::vector<Check>& checks);
json charfn_check_to_json(const SimplicialPoset& s, const CharFunction& lambda, const CharFnCheck& c);

json page_to_json(const PageTable& t);
PageTable page_from_json(std::string label, const json& doc);
json bigraded_to_json(const BigradedTable& t);
BigradedTable bigraded_from_json(int n, const json& cells, const json& totals);

/// Everything the quotient engine produces for one problem.
struct QuotientReport {
  json inputs;
  PageTable e1trunc;
  SpectralPages pages;
  BigradedTable bigraded;
  std::vector<Check> checks;
  std::int64_t euler_x = 0;
  std::int64_t f_top = 0;

  bool all_ok() const { return sposet::all_ok(checks); }
  friend bool operator==(const QuotientReport&, const QuotientReport&) = default;
};

QuotientReport quotient_report(const Bundle& b, std::vector<std::uint64_t> lambda_seeds = {101, 202});
/// report-v1.
json report_to_json(const QuotientReport& r);
QuotientReport report_from_json(const json& doc);

}  // namespace sposet::io
