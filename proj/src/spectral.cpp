#include "sposet/spectral.hpp"

#include <stdexcept>

#include "sposet/facevec.hpp"
#include "sposet/polynomial.hpp"

namespace sposet {

std::string_view to_string(QuotientKind kind) { return kind == QuotientKind::Cone ? "cone" : "manifold"; }

namespace {

std::string describe(const std::vector<Witness>& witnesses) {
  std::string out = "proper faces are not acyclic; offending links:";
  for (const auto& w : witnesses) {
    out += " " + w.element + "[deg " + std::to_string(w.degree) + ": " + std::to_string(w.betti) + "]";
  }
  return out;
}

std::int64_t at_or_zero(const std::vector<std::int64_t>& v, int i) {
  return (i < 0 || i >= static_cast<int>(v.size())) ? 0 : v[static_cast<std::size_t>(i)];
}

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::InconsistentBundle, what); }

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

/// Ranks of the (Q, dQ) sequence, validated against exactness.
BoundaryRanks boundary_ranks(QuotientKind kind, int n, const BettiVector& boundary_betti,
                             const std::vector<std::int64_t>& betti_q, const std::vector<std::int64_t>& iota) {
  BoundaryRanks r;
  for (int i = 0; i <= n; ++i) r.boundary.push_back(i < n ? boundary_betti.unreduced(i) : 0);
  r.iota = iota;
  for (int i = 0; i <= n; ++i) {
    if (kind == QuotientKind::Cone) {
      r.relative.push_back(boundary_betti.at(i - 1));
    } else {
      r.relative.push_back(betti_q[static_cast<std::size_t>(n - i)]);
    }
  }
  for (int i = 0; i <= n; ++i) {
    r.delta.push_back(r.relative[static_cast<std::size_t>(i)] - betti_q[static_cast<std::size_t>(i)] +
                      iota[static_cast<std::size_t>(i)]);
  }

  for (int i = 0; i <= n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    if (betti_q[iu] < 0 || iota[iu] < 0) inconsistent("negative entry at index " + std::to_string(i));
    if (iota[iu] > std::min(r.boundary[iu], betti_q[iu])) {
      inconsistent(idx("iota", i) + " = " + std::to_string(iota[iu]) + " exceeds min(dim H_i(dQ), dim H_i(Q))");
    }
    const std::int64_t d = r.delta[iu];
    if (d < 0) inconsistent(idx("delta", i) + " = " + std::to_string(d) + " is negative");
    if (d > std::min(r.relative[iu], at_or_zero(r.boundary, i - 1))) {
      inconsistent(idx("delta", i) + " = " + std::to_string(d) + " exceeds min(dim H_i(Q,dQ), dim H_{i-1}(dQ))");
    }
  }
  // Exactness at H_i(dQ): image of delta_{i+1} is the kernel of iota_i.
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    if (r.delta[iu + 1] + r.iota[iu] != r.boundary[iu]) {
      inconsistent("sequence not exact at H_" + std::to_string(i) + "(dQ): rank delta_" + std::to_string(i + 1) +
                   " + iota_" + std::to_string(i) + " = " + std::to_string(r.delta[iu + 1] + r.iota[iu]) +
                   " but dim H_" + std::to_string(i) + "(dQ) = " + std::to_string(r.boundary[iu]));
    }
  }
  return r;
}

}  // namespace

NotBuchsbaumError::NotBuchsbaumError(std::vector<Witness> witnesses)
    : Error(ErrorKind::NotBuchsbaum, describe(witnesses)), witnesses_(std::move(witnesses)) {}

QuotientProblem make_problem(QuotientKind kind, const SimplicialPoset& s, int n, const Coefficients& coeff,
                             std::optional<CharFunction> charfn, std::optional<ManifoldData> manifold) {
  coeff.require_field("quotient construction");
  if (n < 1) inconsistent("n must be positive");
  if (n < s.dim() + 1) {
    inconsistent("poset dimension " + std::to_string(s.dim()) + " differs from n - 1 = " + std::to_string(n - 1));
  }
  SimplicialPoset poset = s.with_rank(n);

  auto cls = link_conditions(poset, coeff);
  if (!cls.buchsbaum) {
    std::vector<Witness> witnesses;
    for (auto& w : cls.witnesses) {
      if (w.property == "buchsbaum") witnesses.push_back(std::move(w));
    }
    throw NotBuchsbaumError(std::move(witnesses));
  }
  if (poset.dim() != n - 1) {
    inconsistent("poset dimension " + std::to_string(poset.dim()) + " differs from n - 1 = " + std::to_string(n - 1));
  }

  if (charfn) {
    if (charfn->n() != n) {
      throw Error(ErrorKind::InvalidCharFn, "characteristic function has rank " + std::to_string(charfn->n()) +
                                                ", expected " + std::to_string(n));
    }
    CharFnCheck verdict;
    try {
      verdict = check(poset, *charfn, coeff);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidCharFn, e.what());
    }
    if (!verdict.pass) {
      throw Error(ErrorKind::InvalidCharFn, "fails over " + coeff.to_string() + " at simplex '" +
                                                poset.element(*verdict.first_failure).id + "'");
    }
  }

  std::vector<std::int64_t> betti_q(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> iota(static_cast<std::size_t>(n) + 1, 0);
  bool orientable = true;
  if (kind == QuotientKind::Cone) {
    betti_q[0] = 1;
    iota[0] = 1;
  } else {
    if (!manifold) inconsistent("manifold problems need bettiQ, iota and orientable");
    if (manifold->betti_q.size() != betti_q.size() || manifold->iota.size() != iota.size()) {
      inconsistent("bettiQ and iota must have n + 1 = " + std::to_string(n + 1) + " entries");
    }
    if (!manifold->orientable) inconsistent("the orbit space must be asserted orientable");
    betti_q = manifold->betti_q;
    iota = manifold->iota;
    orientable = manifold->orientable;
  }

  auto boundary = reduced_betti(poset, coeff);
  boundary_ranks(kind, n, boundary, betti_q, iota);
  auto h = f_h_vectors(poset).h;
  return QuotientProblem{kind,   std::move(poset), n, coeff, std::move(charfn), std::move(betti_q), std::move(iota),
                         orientable, std::move(boundary), std::move(h)};
}

BoundaryRanks relative_and_delta(const QuotientProblem& prob) {
  return boundary_ranks(prob.kind, prob.n, prob.boundary_betti, prob.betti_q, prob.iota);
}

std::int64_t PageTable::at(int p, int q) const {
  auto it = cells.find({p, q});
  return it == cells.end() ? 0 : it->second;
}

std::vector<std::int64_t> PageTable::diagonal(int n) const {
  std::vector<std::int64_t> out;
  for (int q = 0; q <= n; ++q) out.push_back(at(q, q));
  return out;
}

std::int64_t BigradedTable::at(int i, int j) const {
  auto it = cells.find({i, j});
  return it == cells.end() ? 0 : it->second;
}

PageTable e1_truncated(const QuotientProblem& prob) {
  const int n = prob.n;
  const auto ft = ft_vector(prob.poset, prob.coeff);
  PageTable t{"e1trunc", {}};
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) t.cells[{p, q}] = checked_mul(binomial(p, q), ft[static_cast<std::size_t>(n - p - 1)]);
  }
  return t;
}

std::int64_t e1_row_euler_expected(const QuotientProblem& prob, int q) {
  const auto fh = f_h_vectors(prob.poset);
  return (fh.chi - 1) * binomial(prob.n, q) + sign_pow(q) * fh.h[static_cast<std::size_t>(q)];
}

std::int64_t diagonal_first_page(const QuotientProblem& prob, int q) {
  std::int64_t alternating = 0;
  for (int p = 0; p <= q; ++p) alternating += sign_pow(p + q) * prob.boundary_betti.at(p);
  return prob.h[static_cast<std::size_t>(q)] + checked_mul(binomial(prob.n, q), alternating);
}

SpectralPages pages(const QuotientProblem& prob) {
  const int n = prob.n;
  const auto ranks = relative_and_delta(prob);
  SpectralPages sp;
  sp.ea1.label = "ea1";
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < p; ++q) {
      sp.ea1.cells[{p, q}] = checked_mul(ranks.boundary[static_cast<std::size_t>(p)], binomial(n, q));
    }
    sp.ea1.cells[{p, p}] = diagonal_first_page(prob, p);
  }
  for (int q1 = 0; q1 <= n; ++q1) {
    for (int q2 = 0; q2 <= n; ++q2) {
      ColumnComponent c;
      c.q1 = q1;
      c.q2 = q2;
      c.initial = checked_mul(ranks.relative[static_cast<std::size_t>(q1)], binomial(n, q2));
      if (q1 >= 1 && q2 <= q1 - 1) {
        c.killed = checked_mul(ranks.delta[static_cast<std::size_t>(q1)], binomial(n, q2));
        c.page = n - q1 + 1;
      }
      sp.ea1.cells[{n, q1 + q2 - n}] += c.initial;
      sp.column.push_back(c);
    }
  }

  sp.ea2 = sp.ea1;
  sp.ea2.label = "ea2";
  sp.eainf = sp.ea1;
  sp.eainf.label = "eainf";
  for (const auto& c : sp.column) {
    if (c.page == 0) continue;
    const std::pair<int, int> source{n, c.q1 + c.q2 - n};
    const std::pair<int, int> target{c.q1 - 1, c.q2};
    sp.eainf.cells[source] -= c.killed;
    sp.eainf.cells[target] -= c.killed;
    if (c.page == 1) {
      sp.ea2.cells[source] -= c.killed;
      sp.ea2.cells[target] -= c.killed;
    }
  }
  return sp;
}

namespace {

void fill_totals(BigradedTable& t) {
  t.totals.assign(static_cast<std::size_t>(2 * t.n) + 1, 0);
  for (const auto& [ij, v] : t.cells) t.totals[static_cast<std::size_t>(ij.first + ij.second)] += v;
}

}  // namespace

BigradedTable bigraded_betti(const QuotientProblem& prob) {
  prob.coeff.require_field("bigraded Betti numbers");
  const int n = prob.n;
  const auto r = relative_and_delta(prob);
  BigradedTable t;
  t.n = n;
  for (int i = 0; i <= n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    for (int j = 0; j <= n; ++j) {
      std::int64_t v = 0;
      if (i > j) {
        v = checked_mul(prob.betti_q[iu], binomial(n, j));
      } else if (i < j) {
        v = checked_mul(r.relative[iu], binomial(n, j));
      } else if (i < n) {
        const std::int64_t survivors = diagonal_first_page(prob, i) - binomial(n, i) * r.delta[iu + 1];
        v = survivors + checked_mul(r.relative[iu], binomial(n, i));
      } else {
        v = r.relative[iu];
      }
      t.cells[{i, j}] = v;
    }
  }
  fill_totals(t);
  return t;
}

BigradedTable bigraded_from_pages(const SpectralPages& sp, int n) {
  BigradedTable t;
  t.n = n;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) t.cells[{i, j}] = i < n ? sp.eainf.at(i, j) : 0;
  }
  for (const auto& c : sp.column) t.cells[{c.q1, c.q2}] += c.initial - c.killed;
  fill_totals(t);
  return t;
}

const Check& VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

VerifyReport verify(const QuotientProblem& prob, std::vector<std::uint64_t> lambda_seeds) {
  const int n = prob.n;
  VerifyReport rep;
  auto add = [&rep](std::string name, bool applicable, bool holds, std::string note = {}) {
    rep.checks.push_back(Check{std::move(name), applicable, holds, std::move(note)});
  };

  const auto e1t = e1_truncated(prob);
  const auto sp = pages(prob);
  const auto closed = bigraded_betti(prob);
  const auto from_pages = bigraded_from_pages(sp, n);
  const auto hp = h_prime_double(prob.h, prob.boundary_betti, n);
  const auto cls = link_conditions(prob.poset, prob.coeff);

  {
    bool holds = true;
    for (const auto* t : {&e1t, &sp.ea1, &sp.ea2, &sp.eainf}) {
      for (const auto& [pq, v] : t->cells) holds = holds && v >= 0;
    }
    for (const auto& [ij, v] : closed.cells) holds = holds && v >= 0;
    add("pages_nonnegative", true, holds);
  }
  {
    bool holds = true;
    for (const auto& [pq, v] : sp.ea1.cells) {
      holds = holds && sp.ea2.at(pq.first, pq.second) <= v &&
              sp.eainf.at(pq.first, pq.second) <= sp.ea2.at(pq.first, pq.second);
    }
    add("pages_monotone", true, holds);
  }
  {
    bool holds = true;
    for (const auto* t : {&sp.ea1, &sp.ea2, &sp.eainf}) {
      for (const auto& [pq, v] : t->cells) {
        if (pq.first < n && pq.second > pq.first && v != 0) holds = false;
      }
    }
    add("vanishing_above_diagonal", true, holds);
  }
  {
    for (const auto& [pq, v] : sp.ea1.cells) rep.euler_first_page += sign_pow(pq.first + pq.second) * v;
    for (std::size_t k = 0; k < closed.totals.size(); ++k) {
      rep.euler_x += sign_pow(static_cast<std::int64_t>(k)) * closed.totals[k];
    }
    rep.f_top = prob.poset.f_vector()[static_cast<std::size_t>(n)];
    add("euler_conservation", true, rep.euler_first_page == rep.euler_x,
        "chi(X) = " + std::to_string(rep.euler_x) + ", f_{n-1}(S) = " + std::to_string(rep.f_top));
  }
  {
    bool holds = true;
    for (int q = 0; q < n; ++q) {
      std::int64_t row = 0;
      for (int p = q; p < n; ++p) row += sign_pow(p) * e1t.at(p, q);
      holds = holds && row == e1_row_euler_expected(prob, q);
    }
    add("e1trunc_row_euler", true, holds);
  }
  add("pages_match_closed_form", true, from_pages == closed);
  {
    bool holds = true;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) holds = holds && closed.at(i, j) == closed.at(n - i, n - j);
    }
    const bool applicable = prob.kind == QuotientKind::Manifold;
    add("bigraded_duality", applicable, holds, applicable ? "" : "skipped: cone problem");
  }
  {
    const bool applicable = prob.kind == QuotientKind::Cone;
    const auto diag = sp.eainf.diagonal(n);
    bool nonneg = true;
    for (auto x : hp.hdoubleprime) nonneg = nonneg && x >= 0;
    add("eainf_diagonal_equals_hdoubleprime", applicable, diag == hp.hdoubleprime,
        applicable ? "" : "skipped: manifold problem");
    add("hdoubleprime_nonnegative", applicable, nonneg, applicable ? "" : "skipped: manifold problem");
  }
  {
    // Both forms rest on Poincare duality of the poset.
    const bool applicable = cls.homology_manifold && cls.orientable_over_field;
    const std::string skip = "skipped: poset is not an orientable homology manifold over " + prob.coeff.to_string();
    bool first = true;
    for (int q = 0; q < n; ++q) {
      const std::int64_t hprime_form = q <= n - 2 ? hp.hprime[static_cast<std::size_t>(n - q)]
                                                  : hp.hprime[1] + n;
      first = first && diagonal_first_page(prob, q) == hprime_form;
    }
    add("ea1_diagonal_hprime_form", applicable, first, applicable ? "" : skip);
    bool second = true;
    for (int q = 0; q <= n; ++q) second = second && sp.ea2.at(q, q) == hp.hprime[static_cast<std::size_t>(n - q)];
    add("ea2_diagonal_hprime_form", applicable, second, applicable ? "" : skip);
  }
  {
    bool holds = true;
    int used = 0;
    std::string note;
    const auto base_e1t = e1t;
    for (auto seed : lambda_seeds) {
      std::optional<CharFunction> other;
      try {
        other = random_charfn(prob.poset, n, prob.coeff, seed, 3);
      } catch (const Error& e) {
        note = e.what();
        continue;
      }
      std::optional<ManifoldData> data;
      if (prob.kind == QuotientKind::Manifold) data = ManifoldData{prob.betti_q, prob.iota, prob.orientable};
      const auto again = make_problem(prob.kind, prob.poset, n, prob.coeff, other, data);
      holds = holds && pages(again) == sp && bigraded_betti(again) == closed && e1_truncated(again) == base_e1t;
      ++used;
    }
    add("lambda_independence", used > 0, holds,
        used > 0 ? std::to_string(used) + " alternative characteristic functions" : note);
  }
  return rep;
}

}  // namespace sposet
