#include "sposet/charfn.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sposet/error.hpp"
#include "sposet/integer_matrix.hpp"

namespace sposet {

namespace {

std::int64_t gcd_of(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace

CharFunction::CharFunction(int n, std::map<std::string, std::vector<std::int64_t>> assignment)
    : n_(n), assignment_(std::move(assignment)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "torus rank must be positive");
  for (const auto& [vertex, vec] : assignment_) {
    if (static_cast<int>(vec.size()) != n_) {
      throw Error(ErrorKind::WrongVectorLength, "vertex '" + vertex + "': expected " + std::to_string(n_) +
                                                    " entries, got " + std::to_string(vec.size()));
    }
    if (gcd_of(vec) != 1) {
      throw Error(ErrorKind::NonPrimitiveVector, "vertex '" + vertex + "': vector is not primitive");
    }
  }
}

const std::vector<std::int64_t>& CharFunction::at(const std::string& vertex) const {
  auto it = assignment_.find(vertex);
  if (it == assignment_.end()) {
    throw Error(ErrorKind::MissingVertexAssignment, "vertex '" + vertex + "' has no assigned vector");
  }
  return it->second;
}

SimplexVerdict check_simplex(const SimplicialPoset& s, ElemIndex i, const CharFunction& lambda,
                             const Coefficients& coeff) {
  const auto& e = s.element(i);
  IntMatrix m(e.vertices.size(), static_cast<std::size_t>(lambda.n()));
  for (std::size_t r = 0; r < e.vertices.size(); ++r) {
    const auto& vec = lambda.at(s.vertex_labels()[static_cast<std::size_t>(e.vertices[r])]);
    for (std::size_t c = 0; c < vec.size(); ++c) m(r, c) = vec[c];
  }
  SimplexVerdict v;
  v.element = i;
  switch (coeff.kind()) {
    case Coefficients::Kind::Integers: {
      auto snf = smith_normal_form(m);
      v.rank = snf.rank();
      v.pass = v.rank == e.vertices.size() &&
               std::all_of(snf.factors.begin(), snf.factors.end(), [](const mpz_class& f) { return f == 1; });
      v.factors = std::move(snf.factors);
      break;
    }
    case Coefficients::Kind::Rationals:
      v.rank = rank_rational(m);
      v.pass = v.rank == e.vertices.size();
      break;
    case Coefficients::Kind::PrimeField:
      v.rank = rank_mod_p(m, coeff.prime());
      v.pass = v.rank == e.vertices.size();
      break;
  }
  return v;
}

CharFnCheck check(const SimplicialPoset& s, const CharFunction& lambda, const Coefficients& coeff) {
  for (const auto& label : s.vertex_labels()) lambda.at(label);
  CharFnCheck out;
  out.coeff = coeff;
  out.pass = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto v = check_simplex(s, static_cast<ElemIndex>(i), lambda, coeff);
    if (!v.pass && out.pass) {
      out.pass = false;
      out.first_failure = v.element;
    }
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

CharFunction random_assignment(const SimplicialPoset& s, int n, std::uint64_t seed, std::uint64_t attempt,
                               std::int64_t bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be at least 1");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "torus rank must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  std::mt19937_64 gen(seq);
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  std::map<std::string, std::vector<std::int64_t>> assignment;
  for (const auto& label : s.vertex_labels()) {
    std::vector<std::int64_t> vec(static_cast<std::size_t>(n));
    std::int64_t g = 0;
    while (g == 0) {
      for (auto& x : vec) x = entry(gen);
      g = gcd_of(vec);
    }
    for (auto& x : vec) x /= g;
    assignment.emplace(label, std::move(vec));
  }
  return CharFunction(n, std::move(assignment));
}

CharFunction random_charfn(const SimplicialPoset& s, int n, const Coefficients& coeff, std::uint64_t seed,
                           std::int64_t bound, int budget) {
  if (s.dim() != n - 1) {
    throw Error(ErrorKind::InvalidArgument,
                "poset dimension " + std::to_string(s.dim()) + " differs from n - 1 = " + std::to_string(n - 1));
  }
  std::vector<int> failures(s.size(), 0);
  for (int attempt = 0; attempt < budget; ++attempt) {
    auto lambda = random_assignment(s, n, seed, static_cast<std::uint64_t>(attempt), bound);
    bool ok = true;
    // Low-rank simplices are faces of top ones; checking maximal ones suffices.
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      if (!s.cofacets(static_cast<ElemIndex>(i)).empty()) continue;
      if (!check_simplex(s, static_cast<ElemIndex>(i), lambda, coeff).pass) {
        ++failures[i];
        ok = false;
      }
    }
    if (ok) return lambda;
  }
  const auto worst = static_cast<ElemIndex>(std::max_element(failures.begin(), failures.end()) - failures.begin());
  throw Error(ErrorKind::BudgetExhausted, "no valid assignment over " + coeff.to_string() + " after " +
                                              std::to_string(budget) + " attempts; simplex '" +
                                              s.element(worst).id + "' failed " +
                                              std::to_string(failures[static_cast<std::size_t>(worst)]) + " times");
}

}  // namespace sposet
