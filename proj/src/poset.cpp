#include "sposet/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "sposet/error.hpp"

namespace sposet {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& id, const std::string& what) {
  throw Error(kind, "element '" + id + "': " + what);
}

/// Builds a genuine simplicial complex from a downward-closed family of
/// vertex sets.
SimplicialPoset complex_from_subsets(
    std::vector<std::string> labels, const std::set<std::vector<VertexIndex>>& subsets,
    const std::function<std::string(const std::vector<VertexIndex>&)>& make_id, std::optional<int> n) {
  std::map<std::vector<VertexIndex>, std::string> ids;
  for (const auto& sub : subsets) ids.emplace(sub, make_id(sub));
  std::vector<RawElement> raw;
  raw.reserve(subsets.size());
  for (const auto& sub : subsets) {
    RawElement e{ids.at(sub), sub, {}};
    if (sub.size() > 1) {
      for (std::size_t j = 0; j < sub.size(); ++j) {
        auto face = sub;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        e.facets.push_back(ids.at(face));
      }
    }
    raw.push_back(std::move(e));
  }
  return SimplicialPoset::from_raw(std::move(labels), std::move(raw), n, false);
}

void add_all_subsets(const std::vector<VertexIndex>& set, std::set<std::vector<VertexIndex>>& out) {
  const std::size_t k = set.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<VertexIndex> sub;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::uint64_t{1} << j)) sub.push_back(set[j]);
    }
    out.insert(std::move(sub));
  }
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na && nb) {
    auto sa = strip_leading_zeros(a);
    auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

SimplicialPoset SimplicialPoset::from_raw(std::vector<std::string> vertex_labels,
                                          std::vector<RawElement> elements, std::optional<int> n,
                                          bool allow_empty) {
  if (elements.empty() && !allow_empty) {
    throw Error(ErrorKind::EmptyInput, "a simplicial poset needs at least one vertex");
  }

  // Canonical vertex order.
  std::vector<VertexIndex> order(vertex_labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return natural_less(vertex_labels[static_cast<std::size_t>(a)], vertex_labels[static_cast<std::size_t>(b)]);
  });
  std::vector<VertexIndex> new_index(vertex_labels.size());
  std::vector<std::string> labels(vertex_labels.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[static_cast<std::size_t>(order[k])] = static_cast<VertexIndex>(k);
    labels[k] = vertex_labels[static_cast<std::size_t>(order[k])];
    if (k > 0 && labels[k] == labels[k - 1]) {
      throw Error(ErrorKind::DuplicateId, "vertex label '" + labels[k] + "' appears twice");
    }
  }

  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!by_id.emplace(elements[i].id, i).second) {
      throw Error(ErrorKind::DuplicateId, "element id '" + elements[i].id + "' appears twice");
    }
  }

  // Translate vertices, check ranks and facet references.
  std::vector<std::vector<VertexIndex>> verts(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    if (e.vertices.empty()) fail(ErrorKind::RankMismatch, e.id, "empty vertex list");
    for (VertexIndex v : e.vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size()) {
        fail(ErrorKind::DanglingFaceRef, e.id, "vertex index out of range");
      }
      verts[i].push_back(new_index[static_cast<std::size_t>(v)]);
    }
    auto sorted = verts[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorKind::RankMismatch, e.id, "repeated vertex");
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    const std::size_t rank = e.vertices.size();
    if (rank == 1) {
      if (!e.facets.empty()) fail(ErrorKind::RankMismatch, e.id, "a vertex has no stored facets");
      continue;
    }
    if (e.facets.size() != rank) {
      fail(ErrorKind::RankMismatch, e.id,
           "rank " + std::to_string(rank) + " but " + std::to_string(e.facets.size()) + " facets");
    }
    for (const auto& f : e.facets) {
      if (!by_id.contains(f)) fail(ErrorKind::DanglingFaceRef, e.id, "unknown facet '" + f + "'");
    }
    std::set<std::string> distinct(e.facets.begin(), e.facets.end());
    if (distinct.size() != e.facets.size()) {
      fail(ErrorKind::NonBooleanInterval, e.id, "a facet is listed twice");
    }
    for (std::size_t j = 0; j < rank; ++j) {
      const std::size_t fi = by_id.at(e.facets[j]);
      if (elements[fi].vertices.size() != rank - 1) {
        fail(ErrorKind::RankMismatch, e.id, "facet '" + e.facets[j] + "' has the wrong rank");
      }
      auto expected = verts[i];
      expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(j));
      std::sort(expected.begin(), expected.end());
      auto actual = verts[fi];
      std::sort(actual.begin(), actual.end());
      if (expected != actual) {
        fail(ErrorKind::NonBooleanInterval, e.id,
             "facet " + std::to_string(j) + " ('" + e.facets[j] + "') does not omit exactly vertex '" +
                 labels[static_cast<std::size_t>(verts[i][j])] + "'");
      }
    }
  }

  // Canonical element order: rank, then sorted vertex list, then id.
  std::vector<std::size_t> perm(elements.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<VertexIndex>> sorted_verts = verts;
  for (auto& v : sorted_verts) std::sort(v.begin(), v.end());
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (sorted_verts[a].size() != sorted_verts[b].size()) return sorted_verts[a].size() < sorted_verts[b].size();
    if (sorted_verts[a] != sorted_verts[b]) return sorted_verts[a] < sorted_verts[b];
    return elements[a].id < elements[b].id;
  });
  std::vector<ElemIndex> position(elements.size());
  for (std::size_t k = 0; k < perm.size(); ++k) position[perm[k]] = static_cast<ElemIndex>(k);

  SimplicialPoset s;
  s.vertex_labels_ = std::move(labels);
  s.elements_.reserve(elements.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const std::size_t i = perm[k];
    SimplexElem out;
    out.id = elements[i].id;
    std::vector<std::pair<VertexIndex, ElemIndex>> pairs;
    for (std::size_t j = 0; j < verts[i].size(); ++j) {
      const ElemIndex f = elements[i].facets.empty() ? ElemIndex{-1} : position[by_id.at(elements[i].facets[j])];
      pairs.emplace_back(verts[i][j], f);
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [v, f] : pairs) {
      out.vertices.push_back(v);
      if (f >= 0) out.facets.push_back(f);
    }
    s.max_rank_ = std::max(s.max_rank_, out.rank());
    s.elements_.push_back(std::move(out));
  }

  // Each vertex label belongs to exactly one rank-one element.
  std::vector<int> vertex_owner(s.vertex_labels_.size(), 0);
  for (const auto& e : s.elements_) {
    if (e.rank() == 1 && ++vertex_owner[static_cast<std::size_t>(e.vertices[0])] > 1) {
      fail(ErrorKind::NonBooleanInterval, e.id,
           "vertex '" + s.vertex_labels_[static_cast<std::size_t>(e.vertices[0])] + "' has two rank-one elements");
    }
  }
  for (std::size_t v = 0; v < vertex_owner.size(); ++v) {
    if (vertex_owner[v] == 0) {
      throw Error(ErrorKind::DanglingFaceRef, "vertex '" + s.vertex_labels_[v] + "' has no rank-one element");
    }
  }

  // Lower intervals: one element per vertex subset, 2^k - 1 non-minimal ones.
  for (std::size_t i = 0; i < s.elements_.size(); ++i) {
    std::map<std::vector<VertexIndex>, ElemIndex> seen;
    std::vector<ElemIndex> stack{static_cast<ElemIndex>(i)};
    while (!stack.empty()) {
      const ElemIndex cur = stack.back();
      stack.pop_back();
      const auto& ce = s.elements_[static_cast<std::size_t>(cur)];
      auto [it, inserted] = seen.emplace(ce.vertices, cur);
      if (!inserted) {
        if (it->second != cur) {
          fail(ErrorKind::NonBooleanInterval, s.elements_[i].id,
               "two faces '" + s.elements_[static_cast<std::size_t>(it->second)].id + "' and '" + ce.id +
                   "' share a vertex set below it");
        }
        continue;
      }
      for (ElemIndex f : ce.facets) stack.push_back(f);
    }
    const std::size_t expected = (std::size_t{1} << s.elements_[i].rank()) - 1;
    if (seen.size() != expected) {
      fail(ErrorKind::NonBooleanInterval, s.elements_[i].id, "lower interval is not Boolean");
    }
  }

  if (n && *n < s.max_rank_) {
    throw Error(ErrorKind::RankMismatch,
                "ambient rank " + std::to_string(*n) + " is below the top rank " + std::to_string(s.max_rank_));
  }
  s.n_ = n.value_or(s.max_rank_);
  s.by_rank_.assign(static_cast<std::size_t>(s.max_rank_), {});
  s.cofacets_.assign(s.elements_.size(), {});
  for (std::size_t i = 0; i < s.elements_.size(); ++i) {
    const auto& e = s.elements_[i];
    s.by_rank_[static_cast<std::size_t>(e.rank() - 1)].push_back(static_cast<ElemIndex>(i));
    for (ElemIndex f : e.facets) s.cofacets_[static_cast<std::size_t>(f)].push_back(static_cast<ElemIndex>(i));
  }
  return s;
}

SimplicialPoset SimplicialPoset::from_face_lattice(const std::vector<ElementSpec>& spec, std::optional<int> n) {
  std::map<std::string, VertexIndex> label_index;
  std::vector<std::string> labels;
  for (const auto& e : spec) {
    for (const auto& v : e.vertices) {
      if (label_index.emplace(v, static_cast<VertexIndex>(labels.size())).second) labels.push_back(v);
    }
  }
  std::vector<RawElement> raw;
  raw.reserve(spec.size());
  for (const auto& e : spec) {
    RawElement r{e.id, {}, e.facets};
    for (const auto& v : e.vertices) r.vertices.push_back(label_index.at(v));
    raw.push_back(std::move(r));
  }
  return from_raw(std::move(labels), std::move(raw), n, false);
}

SimplicialPoset SimplicialPoset::from_facets(const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets given");
  std::map<std::string, VertexIndex> label_index;
  std::vector<std::string> labels;
  std::set<std::vector<VertexIndex>> subsets;
  for (const auto& facet : facets) {
    if (facet.empty()) throw Error(ErrorKind::EmptyInput, "empty facet");
    std::vector<VertexIndex> set;
    for (const auto& v : facet) {
      auto [it, inserted] = label_index.emplace(v, static_cast<VertexIndex>(labels.size()));
      if (inserted) labels.push_back(v);
      set.push_back(it->second);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    add_all_subsets(set, subsets);
  }
  auto make_id = [&labels](const std::vector<VertexIndex>& sub) {
    std::vector<std::string> parts;
    for (VertexIndex v : sub) parts.push_back(labels[static_cast<std::size_t>(v)]);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    return join(parts, ",");
  };
  return complex_from_subsets(labels, subsets, make_id, std::nullopt);
}

SimplicialPoset SimplicialPoset::from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<std::string>> labelled;
  labelled.reserve(facets.size());
  for (const auto& f : facets) {
    std::vector<std::string> l;
    for (int v : f) l.push_back(std::to_string(v));
    labelled.push_back(std::move(l));
  }
  return from_facets(labelled);
}

SimplicialPoset SimplicialPoset::with_rank(int n) const {
  if (n < max_rank_) {
    throw Error(ErrorKind::RankMismatch,
                "ambient rank " + std::to_string(n) + " is below the top rank " + std::to_string(max_rank_));
  }
  SimplicialPoset copy = *this;
  copy.n_ = n;
  return copy;
}

std::span<const ElemIndex> SimplicialPoset::elements_of_rank(int rank) const {
  if (rank < 1 || rank > max_rank_) return {};
  return by_rank_[static_cast<std::size_t>(rank - 1)];
}

std::optional<ElemIndex> SimplicialPoset::find(std::string_view id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].id == id) return static_cast<ElemIndex>(i);
  }
  return std::nullopt;
}

ElemIndex SimplicialPoset::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::UnknownElement, "no element with id '" + std::string(id) + "'");
}

ElemIndex SimplicialPoset::face_with_vertices(ElemIndex i, std::span<const VertexIndex> subset) const {
  ElemIndex cur = i;
  while (true) {
    const auto& e = element(cur);
    if (std::equal(e.vertices.begin(), e.vertices.end(), subset.begin(), subset.end())) return cur;
    std::size_t j = 0;
    while (j < e.vertices.size() && std::binary_search(subset.begin(), subset.end(), e.vertices[j])) ++j;
    if (j == e.vertices.size() || e.facets.empty()) {
      throw Error(ErrorKind::InvalidArgument, "vertex subset is not contained in element '" + e.id + "'");
    }
    cur = e.facets[j];
  }
}

bool SimplicialPoset::leq(ElemIndex a, ElemIndex b) const {
  const auto& va = element(a).vertices;
  const auto& vb = element(b).vertices;
  if (!std::includes(vb.begin(), vb.end(), va.begin(), va.end())) return false;
  return face_with_vertices(b, va) == a;
}

std::vector<std::int64_t> SimplicialPoset::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(n_) + 1, 0);
  f[0] = 1;
  for (const auto& e : elements_) ++f[static_cast<std::size_t>(e.rank())];
  return f;
}

std::vector<ElementSpec> SimplicialPoset::to_spec() const {
  std::vector<ElementSpec> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) {
    ElementSpec spec{e.id, {}, {}};
    for (VertexIndex v : e.vertices) spec.vertices.push_back(vertex_labels_[static_cast<std::size_t>(v)]);
    for (ElemIndex f : e.facets) spec.facets.push_back(element(f).id);
    out.push_back(std::move(spec));
  }
  return out;
}

SimplicialPoset link(const SimplicialPoset& s, std::string_view id) { return link(s, s.index_of(id)); }

SimplicialPoset link(const SimplicialPoset& s, ElemIndex i) {
  if (i < 0 || static_cast<std::size_t>(i) >= s.size()) {
    throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(i) + " out of range");
  }
  const auto& base = s.element(i);

  std::vector<char> above(s.size(), 0);
  std::vector<ElemIndex> stack{i};
  while (!stack.empty()) {
    const ElemIndex cur = stack.back();
    stack.pop_back();
    for (ElemIndex c : s.cofacets(cur)) {
      if (!above[static_cast<std::size_t>(c)]) {
        above[static_cast<std::size_t>(c)] = 1;
        stack.push_back(c);
      }
    }
  }

  std::vector<std::string> labels;
  std::unordered_map<ElemIndex, VertexIndex> cover_vertex;
  for (ElemIndex c : s.cofacets(i)) {
    cover_vertex.emplace(c, static_cast<VertexIndex>(labels.size()));
    labels.push_back(s.element(c).id);
  }

  std::vector<RawElement> raw;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!above[j]) continue;
    const auto& e = s.element(static_cast<ElemIndex>(j));
    RawElement r{e.id, {}, {}};
    for (std::size_t pos = 0; pos < e.vertices.size(); ++pos) {
      const VertexIndex w = e.vertices[pos];
      if (std::binary_search(base.vertices.begin(), base.vertices.end(), w)) continue;
      auto sub = base.vertices;
      sub.insert(std::upper_bound(sub.begin(), sub.end(), w), w);
      const ElemIndex cover = s.face_with_vertices(static_cast<ElemIndex>(j), sub);
      r.vertices.push_back(cover_vertex.at(cover));
      if (e.rank() - base.rank() > 1) r.facets.push_back(s.element(e.facets[pos]).id);
    }
    raw.push_back(std::move(r));
  }
  return SimplicialPoset::from_raw(std::move(labels), std::move(raw), s.n() - base.rank(), true);
}

SimplicialPoset barycentric(const SimplicialPoset& s) {
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (const auto& e : s.elements()) labels.push_back(e.id);

  std::set<std::vector<VertexIndex>> chains;
  std::vector<VertexIndex> chain;
  std::function<void(ElemIndex)> descend = [&](ElemIndex cur) {
    chain.push_back(cur);
    const auto& e = s.element(cur);
    if (e.facets.empty()) {
      auto sorted = chain;
      std::sort(sorted.begin(), sorted.end());
      add_all_subsets(sorted, chains);
    } else {
      for (ElemIndex f : e.facets) descend(f);
    }
    chain.pop_back();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.cofacets(static_cast<ElemIndex>(i)).empty()) descend(static_cast<ElemIndex>(i));
  }
  // Element indices are ordered by rank, so a sorted chain reads bottom-up.
  auto make_id = [&s](const std::vector<VertexIndex>& sub) {
    std::vector<std::string> parts;
    for (VertexIndex v : sub) parts.push_back(s.element(v).id);
    return join(parts, "<");
  };
  return complex_from_subsets(std::move(labels), chains, make_id, s.n());
}

bool is_pure(const SimplicialPoset& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.cofacets(static_cast<ElemIndex>(i)).empty() && s.element(static_cast<ElemIndex>(i)).dim() != s.dim()) {
      return false;
    }
  }
  return true;
}

bool is_connected(const SimplicialPoset& s) {
  if (s.empty()) return false;
  std::vector<ElemIndex> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<ElemIndex(ElemIndex)> root = [&](ElemIndex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::size_t components = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (ElemIndex f : s.element(static_cast<ElemIndex>(i)).facets) {
      const ElemIndex a = root(static_cast<ElemIndex>(i));
      const ElemIndex b = root(f);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  }
  return components == 1;
}

PosetStats validate_stats(const SimplicialPoset& s) {
  return PosetStats{s.dim(), is_pure(s), is_connected(s), s.f_vector()};
}

void require_pure_top(const SimplicialPoset& s, std::string_view context) {
  if (!is_pure(s)) throw Error(ErrorKind::NotPure, std::string(context) + ": poset is not pure");
  if (s.dim() != s.n() - 1) {
    throw Error(ErrorKind::NotPure, std::string(context) + ": dimension " + std::to_string(s.dim()) +
                                        " differs from n - 1 = " + std::to_string(s.n() - 1));
  }
}

}  // namespace sposet
