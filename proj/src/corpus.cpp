#include "sposet/corpus.hpp"

#include <charconv>
#include <optional>

#include "sposet/error.hpp"

namespace sposet::corpus {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::vector<int>> subsets_of_size(int universe, int size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << universe); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<int> s;
    for (int v = 0; v < universe; ++v) {
      if (mask & (1u << v)) s.push_back(v + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::int64_t> binomial_row(int m, int upto) {
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= upto; ++i) row.push_back(row.back() * (m - i + 1) / i);
  return row;
}

std::optional<int> parametric(std::string_view name, std::string_view stem) {
  if (name.size() <= stem.size() + 2 || name.substr(0, stem.size()) != stem || name[stem.size()] != '(' ||
      name.back() != ')') {
    return std::nullopt;
  }
  const auto digits = name.substr(stem.size() + 1, name.size() - stem.size() - 2);
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return k;
}

CorpusEntry boundary_simplex(int k) {
  auto s = SimplicialPoset::from_facets(subsets_of_size(k + 1, k));
  return {"boundary_simplex(" + std::to_string(k) + ")", "boundary of the " + std::to_string(k) + "-simplex",
          std::move(s), json{{"f", binomial_row(k + 1, k)}, {"h", std::vector<std::int64_t>(k + 1, 1)}}};
}

CorpusEntry simplex(int k) {
  auto s = SimplicialPoset::from_facets(subsets_of_size(k + 1, k + 1));
  return {"simplex(" + std::to_string(k) + ")", "the full " + std::to_string(k) + "-simplex, a ball", std::move(s),
          json{{"f", binomial_row(k + 1, k + 1)}}};
}

CorpusEntry triangle_2gon() {
  std::vector<ElementSpec> spec{
      {"1", {"1"}, {}},
      {"2", {"2"}, {}},
      {"3", {"3"}, {}},
      {"12", {"1", "2"}, {"2", "1"}},
      {"13", {"1", "3"}, {"3", "1"}},
      {"23", {"2", "3"}, {"3", "2"}},
      {"A", {"1", "2", "3"}, {"23", "13", "12"}},
      {"B", {"1", "2", "3"}, {"23", "13", "12"}},
  };
  return {"triangle_2gon", "two triangles glued along their whole boundary; a 2-sphere that is not a complex",
          SimplicialPoset::from_face_lattice(spec),
          json{{"f", {1, 3, 3, 2}}, {"h", {1, 0, 0, 1}}}};
}

CorpusEntry two_arc_circle() {
  std::vector<ElementSpec> spec{
      {"a", {"a"}, {}},
      {"b", {"b"}, {}},
      {"e1", {"a", "b"}, {"b", "a"}},
      {"e2", {"a", "b"}, {"b", "a"}},
  };
  return {"two_arc_circle", "circle made of two edges on the same two vertices",
          SimplicialPoset::from_face_lattice(spec), json{{"f", {1, 2, 2}}, {"h", {1, 0, 1}}}};
}

CorpusEntry torus7() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    facets.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return {"torus7", "7-vertex triangulation of the torus", SimplicialPoset::from_facets(facets),
          json{{"f", {1, 7, 21, 14}}, {"h", {1, 4, 10, -1}}, {"betti_q", {0, 0, 2, 1}}}};
}

CorpusEntry rp2_6() {
  std::vector<std::vector<int>> facets{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                       {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  return {"rp2_6", "6-vertex real projective plane", SimplicialPoset::from_facets(facets),
          json{{"f", {1, 6, 15, 10}}, {"h", {1, 3, 6, 0}}, {"betti_f2", {0, 0, 1, 1}}}};
}

CorpusEntry octahedron_s2() {
  std::vector<std::vector<int>> facets;
  for (int a : {1, 2}) {
    for (int b : {3, 4}) {
      for (int c : {5, 6}) facets.push_back({a, b, c});
    }
  }
  return {"octahedron_s2", "boundary of the octahedron", SimplicialPoset::from_facets(facets),
          json{{"f", {1, 6, 12, 8}}, {"h", {1, 3, 3, 1}}}};
}

CorpusEntry s1xI_faceposet() {
  // Q = S^1 x I has two facets, the boundary circles, and no other faces.
  std::vector<ElementSpec> spec{{"F1", {"F1"}, {}}, {"F2", {"F2"}, {}}};
  return {"s1xI_faceposet",
          "face poset of S^1 x I with ambient rank 2; its faces are circles, not acyclic, so the quotient is refused",
          SimplicialPoset::from_face_lattice(spec, 2),
          json{{"f", {1, 2, 0}},
               {"rejection", "NotBuchsbaum"},
               {"betti_profiles",
                {{"S1xS3", {1, 1, 0, 1, 1}}, {"S1xS1xS2", {1, 2, 2, 2, 1}}}}}};
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> list{
      "boundary_simplex(2)", "boundary_simplex(3)", "boundary_simplex(4)", "simplex(2)", "simplex(3)",
      "triangle_2gon",       "two_arc_circle",      "torus7",              "rp2_6",      "octahedron_s2",
      "s1xI_faceposet",
  };
  return list;
}

CorpusEntry entry(std::string_view name) {
  if (auto k = parametric(name, "boundary_simplex"); k && *k >= 1 && *k <= 8) return boundary_simplex(*k);
  if (auto k = parametric(name, "simplex"); k && *k >= 0 && *k <= 7) return simplex(*k);
  if (name == "triangle_2gon") return triangle_2gon();
  if (name == "two_arc_circle") return two_arc_circle();
  if (name == "torus7") return torus7();
  if (name == "rp2_6") return rp2_6();
  if (name == "octahedron_s2") return octahedron_s2();
  if (name == "s1xI_faceposet") return s1xI_faceposet();
  throw Error(ErrorKind::UnknownName, "no corpus entry named '" + std::string(name) + "'");
}

SimplicialPoset poset(std::string_view name) { return entry(name).poset; }

}  // namespace sposet::corpus
