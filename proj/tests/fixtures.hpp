#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sposet/error.hpp"

namespace fixture {

/// Facet lists written out independently of the corpus generators.
inline std::vector<std::vector<int>> torus7_facets() {
  return {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
          {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {4, 6, 7}, {5, 7, 1}, {6, 1, 2}, {7, 2, 3}};
}

inline std::vector<std::vector<int>> rp2_6_facets() {
  return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
          {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
}

inline std::vector<std::vector<int>> octahedron_facets() {
  return {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}};
}

inline std::vector<std::vector<int>> boundary_simplex_facets(int k) {
  std::vector<std::vector<int>> out;
  for (int omit = 1; omit <= k + 1; ++omit) {
    std::vector<int> f;
    for (int v = 1; v <= k + 1; ++v) {
      if (v != omit) f.push_back(v);
    }
    out.push_back(f);
  }
  return out;
}

/// Corpus entries that are genuine simplicial complexes, with their facets.
inline std::vector<std::pair<std::string, std::vector<std::vector<int>>>> complexes() {
  return {{"boundary_simplex(2)", boundary_simplex_facets(2)},
          {"boundary_simplex(3)", boundary_simplex_facets(3)},
          {"boundary_simplex(4)", boundary_simplex_facets(4)},
          {"simplex(2)", {{1, 2, 3}}},
          {"simplex(3)", {{1, 2, 3, 4}}},
          {"torus7", torus7_facets()},
          {"rp2_6", rp2_6_facets()},
          {"octahedron_s2", octahedron_facets()}};
}

inline sposet::ErrorKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const sposet::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected an sposet::Error");
}

}  // namespace fixture
