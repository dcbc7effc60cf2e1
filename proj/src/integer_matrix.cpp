#include "sposet/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sposet/error.hpp"

namespace sposet {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not agree");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(aik, b(k, j), &prod) || __builtin_add_overflow(out(i, j), prod, &out(i, j))) {
          throw std::overflow_error("integer matrix product overflows int64");
        }
      }
    }
  }
  return out;
}

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<long>(m(i, j));
  }
  return a;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfResult result;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      return found;
    };
    std::size_t pr = t;
    std::size_t pc = t;
    if (!find_pivot(pr, pc)) break;

    while (true) {
      std::swap(a[t], a[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; restart with it.
        find_pivot(pr, pc);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
      pr = t;
      pc = t;
      find_pivot(pr, pc);
    }
    result.factors.push_back(abs(a[t][t]));
  }
  return result;
}

std::size_t rank_rational(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    // Bareiss step: exact division by the previous pivot.
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((m(i, j) % p) + p) % p;
  }
  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1;
    std::int64_t base = x;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    const std::int64_t inv = inverse(a[rank][c]);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t factor = a[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - factor * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace sposet
