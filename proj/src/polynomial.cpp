#include "sposet/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sposet {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 addition overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 multiplication overflow");
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-1) * b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return IntPoly();
  std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(std::int64_t k, const IntPoly& a) {
  std::vector<std::int64_t> out(a.c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(k, a.c_[i]);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::int64_t IntPoly::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
    else if (c_[i] < 0) out += "-";
    const std::int64_t mag = c_[i] < 0 ? -c_[i] : c_[i];
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace sposet
