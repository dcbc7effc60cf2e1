#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sposet/charfn.hpp"
#include "sposet/check.hpp"
#include "sposet/classify.hpp"
#include "sposet/coefficients.hpp"
#include "sposet/error.hpp"
#include "sposet/homology.hpp"
#include "sposet/poset.hpp"

namespace sposet {

enum class QuotientKind { Cone, Manifold };

std::string_view to_string(QuotientKind kind);

/// Rank data of a manifold-with-corners orbit space Q that the face poset
/// cannot supply: dims of H_i(Q) and ranks of H_i(dQ) -> H_i(Q), i = 0..n.
struct ManifoldData {
  std::vector<std::int64_t> betti_q;
  std::vector<std::int64_t> iota;
  bool orientable = true;

  friend bool operator==(const ManifoldData&, const ManifoldData&) = default;
};

/// Raised when the face poset fails the link condition; carries the
/// offending links.
class NotBuchsbaumError : public Error {
 public:
  explicit NotBuchsbaumError(std::vector<Witness> witnesses);
  const std::vector<Witness>& witnesses() const { return witnesses_; }

 private:
  std::vector<Witness> witnesses_;
};

/// Validated input of the rank engine. Build with make_problem().
struct QuotientProblem {
  QuotientKind kind;
  SimplicialPoset poset;  // carries ambient rank n
  int n;
  Coefficients coeff;
  std::optional<CharFunction> charfn;
  std::vector<std::int64_t> betti_q;  // dim H_i(Q), i = 0..n
  std::vector<std::int64_t> iota;     // rank H_i(dQ) -> H_i(Q), i = 0..n
  bool orientable;
  BettiVector boundary_betti;         // reduced Betti numbers of the poset
  std::vector<std::int64_t> h;        // h-vector of the poset
};

/// Throws NonFieldCoefficients, NotPure, NotBuchsbaumError, InconsistentBundle,
/// InvalidCharFn.
QuotientProblem make_problem(QuotientKind kind, const SimplicialPoset& s, int n, const Coefficients& coeff,
                             std::optional<CharFunction> charfn = std::nullopt,
                             std::optional<ManifoldData> manifold = std::nullopt);

/// Ranks around the long exact sequence of the pair (Q, dQ), indices 0..n.
struct BoundaryRanks {
  std::vector<std::int64_t> relative;  // dim H_i(Q, dQ)
  std::vector<std::int64_t> delta;     // rank of H_i(Q, dQ) -> H_{i-1}(dQ)
  std::vector<std::int64_t> iota;      // rank of H_i(dQ) -> H_i(Q)
  std::vector<std::int64_t> boundary;  // dim H_i(dQ), unreduced
};

BoundaryRanks relative_and_delta(const QuotientProblem& prob);

/// Sparse rank table of one page; absent cells are zero.
struct PageTable {
  std::string label;
  std::map<std::pair<int, int>, std::int64_t> cells;

  std::int64_t at(int p, int q) const;
  std::vector<std::int64_t> diagonal(int n) const;  // (q, q), q = 0..n
  friend bool operator==(const PageTable&, const PageTable&) = default;
};

/// One summand H_{q1}(Q, dQ) (x) Lambda_{q2} of column n, and the rank its
/// only possible differential removes (at page n - q1 + 1).
struct ColumnComponent {
  int q1 = 0;
  int q2 = 0;
  std::int64_t initial = 0;
  std::int64_t killed = 0;
  int page = 0;  // 0 when the differential lands in the zero region

  friend bool operator==(const ColumnComponent&, const ColumnComponent&) = default;
};

struct SpectralPages {
  PageTable ea1;
  PageTable ea2;
  PageTable eainf;
  std::vector<ColumnComponent> column;

  friend bool operator==(const SpectralPages&, const SpectralPages&) = default;
};

/// First page of the truncated orbit-type spectral sequence of the boundary,
/// dim E^1_{p,q} = C(p,q) ft_{n-p-1}, 0 <= q <= p <= n-1.
PageTable e1_truncated(const QuotientProblem& prob);
/// (chi - 1) C(n,q) + (-1)^q h_q: the Euler characteristic of row q above.
std::int64_t e1_row_euler_expected(const QuotientProblem& prob, int q);

/// dim of the diagonal first-page cell (q, q), q <= n-1, in terms of h and
/// the reduced Betti numbers of the poset.
std::int64_t diagonal_first_page(const QuotientProblem& prob, int q);

SpectralPages pages(const QuotientProblem& prob);

struct BigradedTable {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> cells;  // (i, j), 0 <= i, j <= n
  std::vector<std::int64_t> totals;                   // b_k, k = 0..2n

  std::int64_t at(int i, int j) const;
  friend bool operator==(const BigradedTable&, const BigradedTable&) = default;
};

/// Closed forms for dim H_{i,j}(X). Throws NonFieldCoefficients.
BigradedTable bigraded_betti(const QuotientProblem& prob);
/// The same table read off the surviving cells of the infinity page.
BigradedTable bigraded_from_pages(const SpectralPages& sp, int n);

struct VerifyReport {
  std::vector<Check> checks;
  std::int64_t euler_first_page = 0;
  std::int64_t euler_x = 0;
  std::int64_t f_top = 0;  // f_{n-1}(S); compared with euler_x for the log only

  bool all_ok() const { return sposet::all_ok(checks); }
  const Check& find(std::string_view name) const;
};

/// Runs the consistency suite. `lambda_seeds` drive the recomputation with
/// other random characteristic functions.
VerifyReport verify(const QuotientProblem& prob, std::vector<std::uint64_t> lambda_seeds = {101, 202});

}  // namespace sposet
