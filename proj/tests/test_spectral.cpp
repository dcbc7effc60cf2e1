#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sposet/corpus.hpp"
#include "sposet/facevec.hpp"
#include "sposet/spectral.hpp"

using namespace sposet;
using fixture::error_kind;
using V = std::vector<std::int64_t>;

namespace {

const Coefficients kQ = Coefficients::rationals();

QuotientProblem cone(const std::string& name, const Coefficients& c = kQ) {
  const auto s = corpus::poset(name);
  return make_problem(QuotientKind::Cone, s, s.dim() + 1, c);
}

QuotientProblem solid_torus() {
  return make_problem(QuotientKind::Manifold, corpus::poset("torus7"), 3, kQ, std::nullopt,
                      ManifoldData{{1, 1, 0, 0}, {1, 1, 0, 0}, true});
}

}  // namespace

TEST_CASE("problem validation") {
  CHECK_NOTHROW(cone("boundary_simplex(2)"));
  CHECK_NOTHROW(solid_torus());

  try {
    make_problem(QuotientKind::Manifold, corpus::poset("s1xI_faceposet"), 2, kQ, std::nullopt,
                 ManifoldData{{1, 1, 0}, {1, 1, 0}, true});
    FAIL("expected NotBuchsbaum");
  } catch (const NotBuchsbaumError& e) {
    CHECK(e.kind() == ErrorKind::NotBuchsbaum);
    REQUIRE(e.witnesses().size() == 2);
    CHECK(e.witnesses()[0].element == "F1");
    CHECK(e.witnesses()[1].element == "F2");
  }

  CHECK(error_kind([] { cone("torus7", Coefficients::integers()); }) == ErrorKind::NonFieldCoefficients);
  CHECK(error_kind([] {
          make_problem(QuotientKind::Manifold, corpus::poset("torus7"), 3, kQ, std::nullopt,
                       ManifoldData{{1, 1, 0, 0}, {1, 0, 0, 0}, true});
        }) == ErrorKind::InconsistentBundle);
  CHECK(error_kind([] {
          make_problem(QuotientKind::Manifold, corpus::poset("torus7"), 3, kQ, std::nullopt,
                       ManifoldData{{1, 1, 0}, {1, 1, 0}, true});
        }) == ErrorKind::InconsistentBundle);
  CHECK(error_kind([] {
          make_problem(QuotientKind::Manifold, corpus::poset("torus7"), 3, kQ, std::nullopt,
                       ManifoldData{{1, 1, 0, 0}, {1, 1, 0, 0}, false});
        }) == ErrorKind::InconsistentBundle);
  CHECK(error_kind([] { make_problem(QuotientKind::Manifold, corpus::poset("torus7"), 3, kQ); }) ==
        ErrorKind::InconsistentBundle);
  // in ambient rank 4 the facets have empty links off the top degree
  CHECK(error_kind([] { make_problem(QuotientKind::Cone, corpus::poset("torus7"), 4, kQ); }) ==
        ErrorKind::NotBuchsbaum);
  CHECK(error_kind([] { make_problem(QuotientKind::Cone, corpus::poset("torus7"), 2, kQ); }) ==
        ErrorKind::InconsistentBundle);

  const CharFunction det2(2, {{"1", {1, 0}}, {"2", {0, 1}}, {"3", {1, 2}}});
  CHECK(error_kind([&] {
          make_problem(QuotientKind::Cone, corpus::poset("boundary_simplex(2)"), 2, Coefficients::prime_field(2),
                       det2);
        }) == ErrorKind::InvalidCharFn);
  CHECK_NOTHROW(make_problem(QuotientKind::Cone, corpus::poset("boundary_simplex(2)"), 2, kQ, det2));
}

TEST_CASE("relative homology and connecting ranks") {
  auto r = relative_and_delta(cone("torus7"));
  CHECK(r.relative == V{0, 0, 2, 1});
  CHECK(r.delta == V{0, 0, 2, 1});

  r = relative_and_delta(solid_torus());
  CHECK(r.relative == V{0, 0, 1, 1});
  CHECK(r.delta == V{0, 0, 1, 1});
  CHECK(r.boundary == V{1, 2, 1, 0});

  r = relative_and_delta(cone("boundary_simplex(2)"));
  CHECK(r.relative == V{0, 0, 1});
  CHECK(r.delta == V{0, 0, 1});
}

TEST_CASE("truncated first page") {
  const auto prob = cone("torus7");
  const auto t = e1_truncated(prob);
  CHECK(t.at(0, 0) == 14);
  CHECK(t.at(1, 0) == 21);
  CHECK(t.at(2, 0) == 7);
  CHECK(t.at(1, 1) == 21);
  CHECK(t.at(2, 1) == 14);
  CHECK(t.at(0, 0) - t.at(1, 0) + t.at(2, 0) == e1_row_euler_expected(prob, 0));
  CHECK(e1_row_euler_expected(prob, 0) == 0);
  CHECK(-t.at(1, 1) + t.at(2, 1) == e1_row_euler_expected(prob, 1));
  CHECK(e1_row_euler_expected(prob, 1) == -7);

  const auto tri = e1_truncated(cone("boundary_simplex(2)"));
  CHECK(tri.at(0, 0) == 3);
  CHECK(tri.at(1, 0) == 3);
}

TEST_CASE("pages of the cone over the torus") {
  const auto prob = cone("torus7");
  const auto sp = pages(prob);
  CHECK(sp.ea1.diagonal(3) == V{1, 10, 7, 1});
  CHECK(sp.eainf.diagonal(3) == V{1, 4, 4, 1});
  CHECK(sp.eainf.diagonal(3) == h_prime_double(prob.poset, kQ).hdoubleprime);
  // off-diagonal first page: unreduced Betti numbers of the boundary times C(3, q)
  CHECK(sp.ea1.at(1, 0) == 2);
  CHECK(sp.ea1.at(2, 0) == 1);
  CHECK(sp.ea1.at(2, 1) == 3);
}

TEST_CASE("pages of the solid torus") {
  const auto sp = pages(solid_torus());
  CHECK(sp.ea1.diagonal(3) == V{1, 10, 7, 1});
  CHECK(sp.ea2.diagonal(3) == V{1, 10, 4, 1});
  CHECK(sp.eainf.diagonal(3) == V{1, 7, 4, 1});
}

TEST_CASE("pages of the cone over a triangle boundary") {
  const auto sp = pages(cone("boundary_simplex(2)"));
  CHECK(sp.eainf.diagonal(2) == V{1, 1, 1});
  for (const auto& [pq, v] : sp.eainf.cells) {
    if (pq.first != pq.second) CHECK(v == 0);
  }
}

TEST_CASE("bigraded Betti numbers") {
  auto b = bigraded_betti(cone("torus7"));
  CHECK(b.at(1, 1) == 4);
  CHECK(b.at(2, 2) == 10);
  CHECK(b.at(2, 3) == 2);
  CHECK(b.at(3, 3) == 1);
  CHECK(b.totals == V{1, 0, 4, 0, 10, 2, 1});

  b = bigraded_betti(solid_torus());
  std::map<std::pair<int, int>, std::int64_t> nonzero;
  for (const auto& [ij, v] : b.cells) {
    if (v != 0) nonzero[ij] = v;
  }
  CHECK(nonzero == std::map<std::pair<int, int>, std::int64_t>{
                       {{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 7}, {{2, 2}, 7}, {{2, 3}, 1}, {{3, 3}, 1}});
  CHECK(b.totals == V{1, 1, 7, 0, 7, 1, 1});

  // CW model of CP^2: one cell each in dimensions 0, 2, 4, all boundaries zero
  CHECK(bigraded_betti(cone("boundary_simplex(2)")).totals == V{1, 0, 1, 0, 1});
}

TEST_CASE("quasitoric profile: totals follow the h-vector") {
  for (int k = 2; k <= 4; ++k) {
    const auto prob = cone("boundary_simplex(" + std::to_string(k) + ")");
    const auto totals = bigraded_betti(prob).totals;
    for (std::size_t i = 0; i < totals.size(); ++i) {
      CHECK(totals[i] == (i % 2 == 0 ? prob.h[i / 2] : 0));
    }
  }
  const auto oct = cone("octahedron_s2");
  CHECK(bigraded_betti(oct).totals == V{1, 0, 3, 0, 3, 0, 1});
}

TEST_CASE("verification suite") {
  auto rep = verify(cone("torus7"));
  CHECK(rep.all_ok());
  CHECK(rep.euler_x == 14);
  CHECK(rep.f_top == 14);
  CHECK(rep.find("eainf_diagonal_equals_hdoubleprime").applicable);
  CHECK(rep.find("lambda_independence").applicable);
  CHECK_FALSE(rep.find("bigraded_duality").applicable);

  rep = verify(solid_torus());
  CHECK(rep.all_ok());
  CHECK(rep.find("bigraded_duality").applicable);
  CHECK(rep.find("ea2_diagonal_hprime_form").applicable);

  CHECK(verify(cone("boundary_simplex(2)")).all_ok());
}

TEST_CASE("engine invariants across the corpus") {
  for (const auto& name : corpus::names()) {
    const auto s = corpus::poset(name);
    if (!is_pure(s) || s.dim() != s.n() - 1) continue;
    for (const auto& c : {kQ, Coefficients::prime_field(2), Coefficients::prime_field(3)}) {
      std::optional<QuotientProblem> prob;
      try {
        prob = make_problem(QuotientKind::Cone, s, s.n(), c);
      } catch (const NotBuchsbaumError&) {
        continue;
      }
      const auto sp = pages(*prob);
      const auto closed = bigraded_betti(*prob);
      CHECK_MESSAGE(bigraded_from_pages(sp, prob->n) == closed, name);
      // Euler characteristic of the first page against an independent sum of the totals
      std::int64_t first = 0;
      for (const auto& [pq, v] : sp.ea1.cells) first += ((pq.first + pq.second) % 2 == 0 ? 1 : -1) * v;
      std::int64_t x = 0;
      for (std::size_t k = 0; k < closed.totals.size(); ++k) x += (k % 2 == 0 ? 1 : -1) * closed.totals[k];
      CHECK_MESSAGE(first == x, name);
      CHECK_MESSAGE(closed.totals[0] == 1, name);
      const auto rep = verify(*prob, {7});
      for (const auto& chk : rep.checks) CHECK_MESSAGE(chk.ok(), name << " " << c.to_string() << " " << chk.name);
    }
  }
}

TEST_CASE("a ball given as a manifold bundle matches the cone") {
  for (const auto& name : {"boundary_simplex(2)", "boundary_simplex(3)", "octahedron_s2"}) {
    const auto s = corpus::poset(name);
    const int n = s.n();
    V ball(static_cast<std::size_t>(n) + 1, 0);
    ball[0] = 1;
    const auto m = make_problem(QuotientKind::Manifold, s, n, kQ, std::nullopt, ManifoldData{ball, ball, true});
    const auto c = make_problem(QuotientKind::Cone, s, n, kQ);
    CHECK(pages(m) == pages(c));
    CHECK(bigraded_betti(m) == bigraded_betti(c));
    const auto rep = verify(m);
    for (const auto& chk : rep.checks) CHECK_MESSAGE(chk.ok(), name << " " << chk.name);
    CHECK(rep.find("bigraded_duality").applicable);
  }
}

TEST_CASE("the engine output does not depend on the characteristic function") {
  const auto s = corpus::poset("boundary_simplex(3)");
  const auto base = make_problem(QuotientKind::Cone, s, 3, kQ);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto lambda = random_q_charfn(s, 3, seed, 3);
    const auto with = make_problem(QuotientKind::Cone, s, 3, kQ, lambda);
    CHECK(pages(with) == pages(base));
    CHECK(bigraded_betti(with) == bigraded_betti(base));
    CHECK(e1_truncated(with) == e1_truncated(base));
  }
}

TEST_CASE("non-acyclic faces: Kunneth profiles") {
  // S^1 x S^3 and S^1 x S^1 x S^2, the two spaces over S^1 x I
  CHECK(oracle::poincare_product({1, 1}, {1, 0, 0, 1}) == oracle::Vec{1, 1, 0, 1, 1});
  CHECK(oracle::poincare_product(oracle::poincare_product({1, 1}, {1, 1}), {1, 0, 1}) ==
        oracle::Vec{1, 2, 2, 2, 1});
  const auto expected = corpus::entry("s1xI_faceposet").expected;
  CHECK(expected["betti_profiles"]["S1xS3"].get<std::vector<int>>() == std::vector<int>{1, 1, 0, 1, 1});
  CHECK(expected["betti_profiles"]["S1xS1xS2"].get<std::vector<int>>() == std::vector<int>{1, 2, 2, 2, 1});
}
