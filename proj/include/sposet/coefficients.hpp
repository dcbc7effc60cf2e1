#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sposet {

/// Coefficient ring for homology and rank computations: Z, Q or F_p.
class Coefficients {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  /// Throws InvalidCoefficients unless p is prime.
  static Coefficients prime_field(std::int64_t p);

  /// Accepts "z", "q" and "fp:<p>".
  static Coefficients parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::int64_t prime() const { return prime_; }
  bool is_field() const { return kind_ != Kind::Integers; }

  /// Inverse of parse().
  std::string to_string() const;

  /// Throws NonFieldCoefficients for Z.
  void require_field(std::string_view context) const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind kind, std::int64_t p) : kind_(kind), prime_(p) {}

  Kind kind_;
  std::int64_t prime_;
};

bool is_prime(std::int64_t p);

}  // namespace sposet
