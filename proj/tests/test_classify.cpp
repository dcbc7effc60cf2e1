#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sposet/classify.hpp"
#include "sposet/corpus.hpp"
#include "sposet/facevec.hpp"

using namespace sposet;
using fixture::error_kind;

namespace {

const Coefficients kQ = Coefficients::rationals();
const Coefficients kF2 = Coefficients::prime_field(2);

}  // namespace

TEST_CASE("link table") {
  const auto s = corpus::poset("boundary_simplex(2)");
  const auto table = link_table(s, kQ);
  REQUIRE(table.size() == 6);
  for (const auto& row : table) {
    const auto& e = s.element(row.element);
    if (e.rank() == 1) {
      CHECK(row.betti.at(0) == 1);
      CHECK(row.betti.at(-1) == 0);
    } else {
      CHECK(row.betti.reduced == std::vector<std::int64_t>{1});
    }
  }
  for (const auto& row : link_table(corpus::poset("torus7"), kQ)) {
    if (corpus::poset("torus7").element(row.element).rank() == 1) CHECK(row.betti.at(1) == 1);
  }
  for (const auto& row : link_table(corpus::poset("simplex(2)"), kQ)) {
    if (corpus::poset("simplex(2)").element(row.element).rank() == 1) {
      for (auto b : row.betti.reduced) CHECK(b == 0);
    }
  }
  // both facets of the S^1 x I face poset have empty links in ambient rank 2
  for (const auto& row : link_table(corpus::poset("s1xI_faceposet"), kQ)) CHECK(row.betti.at(-1) == 1);
  const auto impure = SimplicialPoset::from_facets(std::vector<std::vector<int>>{{1, 2, 3}, {3, 4}});
  CHECK(error_kind([&] { link_table(impure, kQ); }) == ErrorKind::NotPure);
}

TEST_CASE("classification examples") {
  auto c = classify(corpus::poset("torus7"), kQ);
  CHECK(c.buchsbaum);
  CHECK_FALSE(c.cohen_macaulay);
  CHECK(c.homology_manifold);
  CHECK(c.orientable_over_field);
  REQUIRE(c.witnesses.size() == 1);
  CHECK(c.witnesses[0].property == "cohen_macaulay");
  CHECK(c.witnesses[0].element.empty());
  CHECK(c.witnesses[0].degree == 1);
  CHECK(c.witnesses[0].betti == 2);

  c = classify(corpus::poset("boundary_simplex(2)"), kQ);
  CHECK(c.cohen_macaulay);
  CHECK(c.homology_manifold);
  CHECK(c.witnesses.empty());

  c = classify(corpus::poset("rp2_6"), kQ);
  CHECK(c.cohen_macaulay);
  CHECK(c.homology_manifold);
  CHECK_FALSE(c.orientable_over_field);

  c = classify(corpus::poset("rp2_6"), kF2);
  CHECK(c.buchsbaum);
  CHECK_FALSE(c.cohen_macaulay);
  CHECK(c.homology_manifold);
  CHECK(c.orientable_over_field);

  c = classify(corpus::poset("simplex(2)"), kQ);
  CHECK(c.cohen_macaulay);
  CHECK_FALSE(c.homology_manifold);
  CHECK_FALSE(c.witnesses.empty());
  for (const auto& w : c.witnesses) CHECK(w.property != "buchsbaum");

  // negative control: not a simplicial complex, still Cohen-Macaulay
  c = classify(corpus::poset("two_arc_circle"), kQ);
  CHECK(c.buchsbaum);
  CHECK(c.cohen_macaulay);
  CHECK(c.homology_manifold);
  CHECK(c.witnesses.empty());
}

TEST_CASE("classification invariants over the corpus") {
  for (const auto& name : corpus::names()) {
    const auto s = corpus::poset(name);
    if (!is_pure(s) || s.dim() != s.n() - 1 || !is_connected(s)) continue;
    for (const auto& coeff : {kQ, kF2, Coefficients::prime_field(3)}) {
      const auto c = classify(s, coeff);
      if (c.cohen_macaulay) CHECK(c.buchsbaum);
      if (c.homology_manifold) {
        CHECK(c.buchsbaum);
        const auto f = s.f_vector();
        CHECK_MESSAGE(ft_vector(s, coeff) == std::vector<std::int64_t>(f.begin() + 1, f.end()), name);
      }
      const bool all = c.buchsbaum && c.cohen_macaulay && c.homology_manifold && c.orientable_over_field;
      CHECK(c.witnesses.empty() == all);
    }
    for (std::int64_t p : {2, 3}) CHECK_MESSAGE(field_anomalies(s, p).empty(), name);
  }
}

TEST_CASE("Buchsbaum failure is witnessed") {
  const auto bowtie = SimplicialPoset::from_facets(std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 5}});
  const auto c = classify(bowtie, kQ);
  CHECK_FALSE(c.buchsbaum);
  CHECK_FALSE(c.cohen_macaulay);
  CHECK_FALSE(c.homology_manifold);
  bool found = false;
  for (const auto& w : c.witnesses) {
    if (w.property == "buchsbaum" && w.element == "1" && w.degree == 0 && w.betti == 1) found = true;
  }
  CHECK(found);
}

TEST_CASE("integral link conditions see torsion") {
  // cone over RP^2: the apex link has 2-torsion in degree 1, so the cone is
  // Buchsbaum over Q but not over Z
  std::vector<std::vector<int>> facets;
  for (auto f : fixture::rp2_6_facets()) {
    f.push_back(7);
    facets.push_back(f);
  }
  const auto cone = SimplicialPoset::from_facets(facets);
  CHECK(link_conditions(cone, kQ).buchsbaum);
  CHECK_FALSE(link_conditions(cone, kF2).buchsbaum);
  CHECK_FALSE(link_conditions(cone, Coefficients::integers()).buchsbaum);
}

TEST_CASE("classification errors") {
  const auto disjoint = SimplicialPoset::from_facets(std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
  CHECK(error_kind([&] { classify(disjoint, kQ); }) == ErrorKind::NotConnected);
  const auto impure = SimplicialPoset::from_facets(std::vector<std::vector<int>>{{1, 2, 3}, {3, 4}});
  CHECK(error_kind([&] { classify(impure, kQ); }) == ErrorKind::NotPure);
}
