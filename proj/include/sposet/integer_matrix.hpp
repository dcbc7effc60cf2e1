#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sposet {

/// Dense row-major integer matrix with small entries (boundary and
/// characteristic matrices). Exact work happens on mpz copies.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact product; throws on int64 overflow.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SnfResult {
  std::vector<mpz_class> factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank() const { return factors.size(); }
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Rank over Q by fraction-free elimination (independent of the SNF path).
std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);

}  // namespace sposet
