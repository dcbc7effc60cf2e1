#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sposet {

/// Dense integer polynomial in one variable. Arithmetic is exact and throws
/// std::overflow_error rather than wrapping.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  /// a + b t
  static IntPoly linear(std::int64_t a, std::int64_t b) { return IntPoly({a, b}); }

  /// Coefficient of t^i (zero past the degree).
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  IntPoly pow(unsigned e) const;
  std::int64_t eval(std::int64_t t) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(std::int64_t k, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;  // no trailing zeros; zero polynomial is empty
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// C(n, k); zero when k < 0 or k > n or n < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);
inline std::int64_t sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace sposet
