#include "sposet/facevec.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sposet/classify.hpp"
#include "sposet/error.hpp"

namespace sposet {

IntPoly f_polynomial(const std::vector<std::int64_t>& f) { return IntPoly(f); }

IntPoly h_polynomial(const std::vector<std::int64_t>& f, int n) {
  IntPoly sum;
  const IntPoly t = IntPoly::linear(0, 1);
  const IntPoly one_minus_t = IntPoly::linear(1, -1);
  for (int i = 0; i <= n; ++i) {
    const std::int64_t fi = i < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(i)] : 0;
    sum = sum + fi * (t.pow(static_cast<unsigned>(i)) * one_minus_t.pow(static_cast<unsigned>(n - i)));
  }
  return sum;
}

FhVectors f_h_vectors(const SimplicialPoset& s) {
  require_pure_top(s, "face vectors");
  FhVectors out;
  out.n = s.n();
  out.f = s.f_vector();
  const IntPoly h = h_polynomial(out.f, out.n);
  for (int i = 0; i <= out.n; ++i) out.h.push_back(h[static_cast<std::size_t>(i)]);
  for (int i = 0; i < out.n; ++i) out.chi += sign_pow(i) * out.f[static_cast<std::size_t>(i + 1)];
  out.chitilde = out.chi - 1;
  return out;
}

std::vector<std::int64_t> ft_vector(const SimplicialPoset& s, const Coefficients& coeff) {
  require_pure_top(s, "ft vector");
  coeff.require_field("ft vector");
  const int n = s.n();
  std::vector<std::int64_t> ft(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s.element(static_cast<ElemIndex>(i));
    const auto b = reduced_betti(link(s, static_cast<ElemIndex>(i)), coeff);
    ft[static_cast<std::size_t>(e.dim())] += b.at(n - 1 - e.rank());
  }
  return ft;
}

HPrimeVectors h_prime_double(const std::vector<std::int64_t>& h, const BettiVector& betti, int n) {
  HPrimeVectors out;
  for (int i = 0; i <= n; ++i) {
    std::int64_t correction = 0;
    for (int j = 1; j <= i - 1; ++j) correction += sign_pow(i - j - 1) * betti.at(j - 1);
    out.hprime.push_back(h[static_cast<std::size_t>(i)] + checked_mul(binomial(n, i), correction));
  }
  for (int i = 0; i <= n; ++i) {
    const std::int64_t hp = out.hprime[static_cast<std::size_t>(i)];
    out.hdoubleprime.push_back(i == n ? hp : hp - checked_mul(binomial(n, i), betti.at(i - 1)));
  }
  return out;
}

HPrimeVectors h_prime_double(const SimplicialPoset& s, const Coefficients& coeff) {
  coeff.require_field("h' and h'' vectors");
  const auto fh = f_h_vectors(s);
  return h_prime_double(fh.h, reduced_betti(s, coeff), fh.n);
}

FaceVectorReport face_vector_report(const SimplicialPoset& s, const Coefficients& coeff) {
  coeff.require_field("face vector report");
  const auto fh = f_h_vectors(s);
  FaceVectorReport r;
  r.n = fh.n;
  r.coeff = coeff;
  r.f = fh.f;
  r.h = fh.h;
  r.chi = fh.chi;
  r.chitilde = fh.chitilde;
  r.ft = ft_vector(s, coeff);
  r.betti = reduced_betti(s, coeff);
  auto hp = h_prime_double(fh.h, r.betti, fh.n);
  r.hprime = std::move(hp.hprime);
  r.hdoubleprime = std::move(hp.hdoubleprime);
  return r;
}

bool IdentityReport::all_ok() const {
  return sposet::all_ok(checks);
}

const Check& IdentityReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

IdentityReport identity_report(const SimplicialPoset& s, const Coefficients& coeff) {
  IdentityReport rep;
  rep.vectors = face_vector_report(s, coeff);
  const auto& v = rep.vectors;
  const int n = v.n;
  const auto cls = link_conditions(s, coeff);
  rep.buchsbaum = cls.buchsbaum;
  rep.homology_manifold = cls.homology_manifold;
  rep.orientable = cls.orientable_over_field;
  auto add = [&rep](std::string name, bool applicable, bool holds, std::string note = {}) {
    rep.checks.push_back(Check{std::move(name), applicable, holds, std::move(note)});
  };
  const std::string not_buchsbaum = "skipped: not Buchsbaum over " + coeff.to_string();

  add("h_sum_equals_f_top", true,
      std::accumulate(v.h.begin(), v.h.end(), std::int64_t{0}) == v.f[static_cast<std::size_t>(n)]);
  add("h0_equals_one", true, v.h[0] == 1);
  add("hn_equals_signed_reduced_euler", true, v.h[static_cast<std::size_t>(n)] == sign_pow(n - 1) * v.chitilde);
  add("hprime_n_equals_top_betti", true, v.hprime[static_cast<std::size_t>(n)] == v.betti.at(n - 1));
  add("euler_poincare", true, v.chi == euler_characteristic(v.betti));

  // f_S(t) = (1 - chi) + (-1)^n sum_k ft_k (-t-1)^{k+1}
  {
    IntPoly rhs = IntPoly::constant(1 - v.chi);
    IntPoly sum;
    for (int k = 0; k < n; ++k) {
      sum = sum + v.ft[static_cast<std::size_t>(k)] * IntPoly::linear(-1, -1).pow(static_cast<unsigned>(k + 1));
    }
    rhs = rhs + sign_pow(n) * sum;
    add("f_from_ft_polynomial", cls.buchsbaum, f_polynomial(v.f) == rhs, cls.buchsbaum ? "" : not_buchsbaum);
  }
  // sum h_i t^i = (1-t)^n (1 - chi) + sum_k ft_k (t-1)^{n-k-1}
  {
    IntPoly rhs = (1 - v.chi) * IntPoly::linear(1, -1).pow(static_cast<unsigned>(n));
    for (int k = 0; k < n; ++k) {
      rhs = rhs + v.ft[static_cast<std::size_t>(k)] * IntPoly::linear(-1, 1).pow(static_cast<unsigned>(n - k - 1));
    }
    add("h_from_ft_polynomial", cls.buchsbaum, IntPoly(v.h) == rhs, cls.buchsbaum ? "" : not_buchsbaum);
  }
  // h_i = (1-chi)(-1)^i C(n,i) + sum_k (-1)^{n-k-i-1} C(n-k-1,i) ft_k
  {
    bool holds = true;
    for (int i = 0; i <= n; ++i) {
      std::int64_t value = (1 - v.chi) * sign_pow(i) * binomial(n, i);
      for (int k = 0; k < n; ++k) {
        value += sign_pow(n - k - i - 1) * binomial(n - k - 1, i) * v.ft[static_cast<std::size_t>(k)];
      }
      holds = holds && value == v.h[static_cast<std::size_t>(i)];
    }
    add("h_from_ft_coefficients", cls.buchsbaum, holds, cls.buchsbaum ? "" : not_buchsbaum);
  }

  const std::string not_manifold = "skipped: not a homology manifold over " + coeff.to_string();
  {
    bool holds = true;
    for (int i = 0; i <= n; ++i) {
      const std::int64_t rhs = v.h[static_cast<std::size_t>(n - i)] +
                               sign_pow(i) * binomial(n, i) * (1 - sign_pow(n) - v.chi);
      holds = holds && v.h[static_cast<std::size_t>(i)] == rhs;
    }
    add("dehn_sommerville_h", cls.homology_manifold, holds, cls.homology_manifold ? "" : not_manifold);
  }
  {
    bool holds = true;
    for (int i = 0; i <= n; ++i) {
      holds = holds && v.hdoubleprime[static_cast<std::size_t>(i)] == v.hdoubleprime[static_cast<std::size_t>(n - i)];
    }
    // The symmetry rests on Poincare duality of S, hence orientability.
    const bool applicable = cls.homology_manifold && cls.orientable_over_field;
    add("dehn_sommerville_hdoubleprime", applicable, holds,
        applicable ? "" : (cls.homology_manifold ? "skipped: not orientable over " + coeff.to_string() : not_manifold));
  }
  {
    bool holds = true;
    for (int i = 0; i < n; ++i) holds = holds && v.ft[static_cast<std::size_t>(i)] == v.f[static_cast<std::size_t>(i + 1)];
    add("ft_equals_f", cls.homology_manifold, holds, cls.homology_manifold ? "" : not_manifold);
  }
  {
    const bool holds = std::all_of(v.hdoubleprime.begin(), v.hdoubleprime.end(), [](std::int64_t x) { return x >= 0; });
    add("hdoubleprime_nonnegative", cls.buchsbaum, holds, cls.buchsbaum ? "" : not_buchsbaum);
  }
  return rep;
}

}  // namespace sposet
