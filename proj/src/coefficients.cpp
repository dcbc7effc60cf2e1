#include "sposet/coefficients.hpp"

#include <charconv>

#include "sposet/error.hpp"

namespace sposet {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Coefficients Coefficients::prime_field(std::int64_t p) {
  // Products of residues must fit in int64 during elimination.
  if (!is_prime(p) || p > (std::int64_t{1} << 31)) {
    throw Error(ErrorKind::InvalidCoefficients,
                "fp:" + std::to_string(p) + " is not a supported prime");
  }
  return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    auto digits = text.substr(3);
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return prime_field(p);
    }
  }
  throw Error(ErrorKind::InvalidCoefficients,
              "expected z, q or fp:<prime>, got '" + std::string(text) + "'");
}

std::string Coefficients::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Rationals: return "q";
    case Kind::PrimeField: return "fp:" + std::to_string(prime_);
  }
  return "?";
}

void Coefficients::require_field(std::string_view context) const {
  if (!is_field()) {
    throw Error(ErrorKind::NonFieldCoefficients,
                std::string(context) + " requires field coefficients (q or fp:<p>)");
  }
}

}  // namespace sposet
