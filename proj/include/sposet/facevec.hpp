#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sposet/check.hpp"
#include "sposet/coefficients.hpp"
#include "sposet/homology.hpp"
#include "sposet/polynomial.hpp"
#include "sposet/poset.hpp"

namespace sposet {

struct FhVectors {
  int n = 0;
  std::vector<std::int64_t> f;  // f_{-1}..f_{n-1}
  std::vector<std::int64_t> h;  // h_0..h_n
  std::int64_t chi = 0;         // sum_{i>=0} (-1)^i f_i
  std::int64_t chitilde = 0;    // chi - 1
};

/// Throws NotPure unless s is pure of dimension n - 1.
FhVectors f_h_vectors(const SimplicialPoset& s);

/// ft_i = sum over i-simplices I of dim H~_{n-1-|I|}(lk I), i = 0..n-1.
std::vector<std::int64_t> ft_vector(const SimplicialPoset& s, const Coefficients& coeff);

struct HPrimeVectors {
  std::vector<std::int64_t> hprime;        // h'_0..h'_n
  std::vector<std::int64_t> hdoubleprime;  // h''_0..h''_n
};

HPrimeVectors h_prime_double(const SimplicialPoset& s, const Coefficients& coeff);
/// Same transform from already computed h and reduced Betti numbers.
HPrimeVectors h_prime_double(const std::vector<std::int64_t>& h, const BettiVector& betti, int n);

struct FaceVectorReport {
  int n = 0;
  Coefficients coeff = Coefficients::rationals();
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> h;
  std::vector<std::int64_t> ft;
  std::vector<std::int64_t> hprime;
  std::vector<std::int64_t> hdoubleprime;
  std::int64_t chi = 0;
  std::int64_t chitilde = 0;
  BettiVector betti;
};

FaceVectorReport face_vector_report(const SimplicialPoset& s, const Coefficients& coeff);

/// f_S(t) = sum_{i>=0} f_{i-1} t^i.
IntPoly f_polynomial(const std::vector<std::int64_t>& f);
/// sum_i f_{i-1} t^i (1-t)^{n-i}.
IntPoly h_polynomial(const std::vector<std::int64_t>& f, int n);

struct IdentityReport {
  FaceVectorReport vectors;
  bool buchsbaum = false;
  bool homology_manifold = false;
  bool orientable = false;
  std::vector<Check> checks;

  bool all_ok() const;
  const Check& find(std::string_view name) const;
};

/// Evaluates the face-vector identity suite: generating-function form of f in
/// terms of ft, h from ft and chi (polynomial and coefficientwise),
/// h_n and h'_n in terms of Betti numbers, Dehn-Sommerville for homology
/// manifolds, and nonnegativity of h'' for Buchsbaum posets.
IdentityReport identity_report(const SimplicialPoset& s, const Coefficients& coeff);

}  // namespace sposet
