#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "sposet/coefficients.hpp"
#include "sposet/integer_matrix.hpp"
#include "sposet/poset.hpp"

namespace sposet {

/// Augmented cellular chain complex of a simplicial poset: one generator per
/// element, plus the minimal element in degree -1.
struct ChainData {
  int top_dim = -1;
  /// generators[d + 1] lists the elements of dimension d; degree -1 has the
  /// single generator of the minimal element and an empty list here.
  std::vector<std::vector<ElemIndex>> generators;
  /// boundary[d] : C_d -> C_{d-1} for d = 0..top_dim; rows index C_{d-1}.
  std::vector<IntMatrix> boundary;

  std::size_t chain_rank(int degree) const;
};

/// boundary(I) = sum_j (-1)^j facet_j(I); vertices map to the minimal element.
ChainData boundary_matrices(const SimplicialPoset& s);

/// Reduced Betti numbers in degrees -1..n-1 of the poset's ambient rank n.
struct BettiVector {
  Coefficients coeff = Coefficients::rationals();
  std::vector<std::int64_t> reduced;         // reduced[d + 1] = b~_d
  std::vector<std::vector<mpz_class>> torsion;  // same indexing; only for Z

  std::int64_t at(int degree) const;
  /// Unreduced Betti number: b~_0 + 1 in degree 0 for nonempty posets.
  std::int64_t unreduced(int degree) const;
  int max_degree() const { return static_cast<int>(reduced.size()) - 2; }
  bool has_torsion() const;

  friend bool operator==(const BettiVector& a, const BettiVector& b) {
    return a.coeff == b.coeff && a.reduced == b.reduced && a.torsion == b.torsion;
  }
};

BettiVector reduced_betti(const SimplicialPoset& s, const Coefficients& coeff);
BettiVector reduced_betti(const ChainData& chains, int n, const Coefficients& coeff);

/// Cellular homology of s against simplicial homology of its barycentric
/// subdivision, entrywise including torsion over Z.
bool betti_crosscheck(const SimplicialPoset& s, const Coefficients& coeff);

/// Euler characteristic sum_{i>=0} (-1)^i b_i from the unreduced Betti numbers.
std::int64_t euler_characteristic(const BettiVector& b);

}  // namespace sposet
