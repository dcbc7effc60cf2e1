#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sposet/coefficients.hpp"
#include "sposet/homology.hpp"
#include "sposet/poset.hpp"

namespace sposet {

/// A homology group that breaks one of the classification conditions. An
/// empty `element` refers to the poset itself.
struct Witness {
  std::string property;  // buchsbaum | cohen_macaulay | homology_manifold | orientable
  std::string element;
  int degree = 0;
  std::int64_t betti = 0;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LinkRow {
  ElemIndex element = 0;
  BettiVector betti;  // degrees -1 .. n-1-|I|
};

struct Classification {
  Coefficients coeff = Coefficients::rationals();
  bool buchsbaum = false;
  bool cohen_macaulay = false;
  bool homology_manifold = false;
  bool orientable_over_field = false;
  std::vector<Witness> witnesses;
};

/// Reduced Betti numbers of every proper link. Throws NotPure.
std::vector<LinkRow> link_table(const SimplicialPoset& s, const Coefficients& coeff);

/// The link-homology verdicts without the connectivity requirement; used
/// where a disconnected poset must still be judged (quotient input checks).
/// Over Z a condition also fails on torsion in the offending degree.
Classification link_conditions(const SimplicialPoset& s, const Coefficients& coeff);

/// Throws NotPure, NotConnected.
Classification classify(const SimplicialPoset& s, const Coefficients& coeff);

/// Properties that fail over Q yet hold over F_p. Universal coefficients rule
/// this out, so a nonempty result indicates a bug.
std::vector<std::string> field_anomalies(const SimplicialPoset& s, std::int64_t p);

}  // namespace sposet
