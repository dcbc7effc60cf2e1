#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sposet/coefficients.hpp"
#include "sposet/poset.hpp"

namespace sposet {

/// Assignment of primitive integer vectors of length n to vertex labels.
class CharFunction {
 public:
  /// Throws WrongVectorLength or NonPrimitiveVector; vectors are never
  /// normalized silently.
  CharFunction(int n, std::map<std::string, std::vector<std::int64_t>> assignment);

  int n() const { return n_; }
  const std::map<std::string, std::vector<std::int64_t>>& assignment() const { return assignment_; }
  /// Throws MissingVertexAssignment.
  const std::vector<std::int64_t>& at(const std::string& vertex) const;

  friend bool operator==(const CharFunction&, const CharFunction&) = default;

 private:
  int n_;
  std::map<std::string, std::vector<std::int64_t>> assignment_;
};

struct SimplexVerdict {
  ElemIndex element = 0;
  bool pass = false;
  std::size_t rank = 0;
  std::vector<mpz_class> factors;  // Smith invariant factors; Z only
};

struct CharFnCheck {
  Coefficients coeff = Coefficients::integers();
  bool pass = false;
  std::vector<SimplexVerdict> verdicts;  // canonical element order
  std::optional<ElemIndex> first_failure;
};

/// Per-simplex unimodularity: over Z the |I| x n matrix of assigned vectors
/// must have all invariant factors 1 (the map into the lattice is injective
/// and splits); over a field it must have full row rank.
/// Throws MissingVertexAssignment.
CharFnCheck check(const SimplicialPoset& s, const CharFunction& lambda, const Coefficients& coeff);

/// Verdict for a single simplex.
SimplexVerdict check_simplex(const SimplicialPoset& s, ElemIndex i, const CharFunction& lambda,
                             const Coefficients& coeff);

inline constexpr int kDefaultCharFnBudget = 10000;

/// Random primitive vectors with entries in [-bound, bound], one per vertex.
/// Deterministic in (seed, attempt); no validity is implied.
CharFunction random_assignment(const SimplicialPoset& s, int n, std::uint64_t seed, std::uint64_t attempt,
                               std::int64_t bound);

/// Rejection sampling of random_assignment until check() passes over `coeff`.
/// Throws InvalidArgument (bad n or bound) or BudgetExhausted naming the
/// simplex that failed most often.
CharFunction random_charfn(const SimplicialPoset& s, int n, const Coefficients& coeff, std::uint64_t seed,
                           std::int64_t bound, int budget = kDefaultCharFnBudget);

inline CharFunction random_q_charfn(const SimplicialPoset& s, int n, std::uint64_t seed, std::int64_t bound,
                                    int budget = kDefaultCharFnBudget) {
  return random_charfn(s, n, Coefficients::rationals(), seed, bound, budget);
}

}  // namespace sposet
