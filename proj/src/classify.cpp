#include "sposet/classify.hpp"

#include "sposet/error.hpp"

namespace sposet {

namespace {

std::string torsion_note(const BettiVector& b, int degree) {
  const auto idx = static_cast<std::size_t>(degree + 1);
  if (idx >= b.torsion.size() || b.torsion[idx].empty()) return {};
  std::string out = "torsion";
  for (const auto& t : b.torsion[idx]) out += " Z/" + t.get_str();
  return out;
}

bool vanishes(const BettiVector& b, int degree) {
  return b.at(degree) == 0 && torsion_note(b, degree).empty();
}

}  // namespace

std::vector<LinkRow> link_table(const SimplicialPoset& s, const Coefficients& coeff) {
  if (!is_pure(s)) throw Error(ErrorKind::NotPure, "link table: poset is not pure");
  std::vector<LinkRow> rows;
  rows.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto idx = static_cast<ElemIndex>(i);
    rows.push_back(LinkRow{idx, reduced_betti(link(s, idx), coeff)});
  }
  return rows;
}

Classification link_conditions(const SimplicialPoset& s, const Coefficients& coeff) {
  Classification c;
  c.coeff = coeff;
  const int n = s.n();

  bool buchsbaum = true;
  bool manifold = true;
  for (const auto& row : link_table(s, coeff)) {
    const auto& e = s.element(row.element);
    const int top = n - 1 - e.rank();
    for (int d = -1; d <= row.betti.max_degree(); ++d) {
      if (d == top || vanishes(row.betti, d)) continue;
      buchsbaum = false;
      c.witnesses.push_back({"buchsbaum", e.id, d, row.betti.at(d), torsion_note(row.betti, d)});
    }
    if (row.betti.at(top) != 1) {
      manifold = false;
      c.witnesses.push_back({"homology_manifold", e.id, top, row.betti.at(top), "top link homology is not rank one"});
    }
  }

  const auto own = reduced_betti(s, coeff);
  bool concentrated = true;
  for (int d = -1; d <= own.max_degree(); ++d) {
    if (d == n - 1 || vanishes(own, d)) continue;
    concentrated = false;
    c.witnesses.push_back({"cohen_macaulay", "", d, own.at(d), torsion_note(own, d)});
  }
  c.orientable_over_field = own.at(n - 1) == 1;
  if (!c.orientable_over_field) {
    c.witnesses.push_back({"orientable", "", n - 1, own.at(n - 1), "top homology is not rank one"});
  }

  c.buchsbaum = buchsbaum;
  c.cohen_macaulay = buchsbaum && concentrated;
  c.homology_manifold = buchsbaum && manifold;
  return c;
}

Classification classify(const SimplicialPoset& s, const Coefficients& coeff) {
  if (!is_pure(s)) throw Error(ErrorKind::NotPure, "classify: poset is not pure");
  if (!is_connected(s)) throw Error(ErrorKind::NotConnected, "classify: poset is not connected");
  return link_conditions(s, coeff);
}

std::vector<std::string> field_anomalies(const SimplicialPoset& s, std::int64_t p) {
  const auto q = link_conditions(s, Coefficients::rationals());
  const auto fp = link_conditions(s, Coefficients::prime_field(p));
  std::vector<std::string> out;
  if (!q.buchsbaum && fp.buchsbaum) out.emplace_back("buchsbaum");
  if (!q.cohen_macaulay && fp.cohen_macaulay) out.emplace_back("cohen_macaulay");
  if (!q.homology_manifold && fp.homology_manifold) out.emplace_back("homology_manifold");
  return out;
}

}  // namespace sposet
