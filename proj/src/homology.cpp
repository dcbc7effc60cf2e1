#include "sposet/homology.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

namespace sposet {

std::size_t ChainData::chain_rank(int degree) const {
  if (degree == -1) return 1;
  if (degree < -1 || degree > top_dim) return 0;
  return generators[static_cast<std::size_t>(degree + 1)].size();
}

ChainData boundary_matrices(const SimplicialPoset& s) {
  ChainData c;
  c.top_dim = s.dim();
  c.generators.assign(static_cast<std::size_t>(c.top_dim + 2), {});
  std::unordered_map<ElemIndex, std::size_t> position;
  for (int d = 0; d <= c.top_dim; ++d) {
    auto elems = s.elements_of_rank(d + 1);
    c.generators[static_cast<std::size_t>(d + 1)].assign(elems.begin(), elems.end());
    for (std::size_t k = 0; k < elems.size(); ++k) position[elems[k]] = k;
  }
  for (int d = 0; d <= c.top_dim; ++d) {
    const auto& cols = c.generators[static_cast<std::size_t>(d + 1)];
    IntMatrix m(c.chain_rank(d - 1), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& e = s.element(cols[k]);
      if (d == 0) {
        m(0, k) = 1;
        continue;
      }
      for (std::size_t j = 0; j < e.facets.size(); ++j) {
        m(position.at(e.facets[j]), k) += (j % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

std::int64_t BettiVector::at(int degree) const {
  const int idx = degree + 1;
  if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
  return reduced[static_cast<std::size_t>(idx)];
}

std::int64_t BettiVector::unreduced(int degree) const {
  if (degree < 0) return 0;
  return at(degree) + (degree == 0 && at(-1) == 0 ? 1 : 0);
}

bool BettiVector::has_torsion() const {
  return std::any_of(torsion.begin(), torsion.end(), [](const auto& t) { return !t.empty(); });
}

namespace {

struct DegreeRank {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};

DegreeRank boundary_rank(const IntMatrix& m, const Coefficients& coeff) {
  DegreeRank out;
  if (m.empty()) return out;
  switch (coeff.kind()) {
    case Coefficients::Kind::Integers: {
      auto snf = smith_normal_form(m);
      out.rank = snf.rank();
      for (const auto& f : snf.factors) {
        if (f > 1) out.torsion.push_back(f);
      }
      break;
    }
    case Coefficients::Kind::Rationals:
      out.rank = rank_rational(m);
      break;
    case Coefficients::Kind::PrimeField:
      out.rank = rank_mod_p(m, coeff.prime());
      break;
  }
  return out;
}

}  // namespace

BettiVector reduced_betti(const ChainData& chains, int n, const Coefficients& coeff) {
  // Ranks per degree are independent; large ones run concurrently.
  std::vector<std::future<DegreeRank>> jobs;
  for (const auto& m : chains.boundary) {
    const auto policy = m.rows() * m.cols() > 4096 ? std::launch::async : std::launch::deferred;
    jobs.push_back(std::async(policy, [&m, &coeff] { return boundary_rank(m, coeff); }));
  }
  std::vector<DegreeRank> ranks;
  for (auto& j : jobs) ranks.push_back(j.get());
  auto rank_of = [&](int d) -> const DegreeRank* {
    if (d < 0 || d > chains.top_dim) return nullptr;
    return &ranks[static_cast<std::size_t>(d)];
  };

  BettiVector b;
  b.coeff = coeff;
  const int top = std::max(n - 1, chains.top_dim);
  b.reduced.assign(static_cast<std::size_t>(top + 2), 0);
  b.torsion.assign(static_cast<std::size_t>(top + 2), {});
  for (int d = -1; d <= top; ++d) {
    const auto* out = rank_of(d);
    const auto* in = rank_of(d + 1);
    const auto dim = static_cast<std::int64_t>(chains.chain_rank(d));
    b.reduced[static_cast<std::size_t>(d + 1)] =
        dim - static_cast<std::int64_t>(out ? out->rank : 0) - static_cast<std::int64_t>(in ? in->rank : 0);
    if (in && coeff.kind() == Coefficients::Kind::Integers) b.torsion[static_cast<std::size_t>(d + 1)] = in->torsion;
  }
  return b;
}

BettiVector reduced_betti(const SimplicialPoset& s, const Coefficients& coeff) {
  return reduced_betti(boundary_matrices(s), s.n(), coeff);
}

bool betti_crosscheck(const SimplicialPoset& s, const Coefficients& coeff) {
  return reduced_betti(s, coeff) == reduced_betti(barycentric(s), coeff);
}

std::int64_t euler_characteristic(const BettiVector& b) {
  std::int64_t chi = 0;
  for (int d = 0; d <= b.max_degree(); ++d) chi += (d % 2 == 0 ? 1 : -1) * b.unreduced(d);
  return chi;
}

}  // namespace sposet
