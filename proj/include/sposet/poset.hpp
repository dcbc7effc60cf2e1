#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sposet {

using ElemIndex = std::int32_t;
using VertexIndex = std::int32_t;

/// One non-minimal element of a simplicial poset.
///
/// `vertices` is sorted by vertex index. `facets[j]` is the codimension-one
/// face omitting `vertices[j]`; rank-one elements have no stored facets since
/// their only facet is the implicit minimal element.
struct SimplexElem {
  std::string id;
  std::vector<VertexIndex> vertices;
  std::vector<ElemIndex> facets;

  int rank() const { return static_cast<int>(vertices.size()); }
  int dim() const { return rank() - 1; }

  friend bool operator==(const SimplexElem&, const SimplexElem&) = default;
};

/// Decoded, label-based description of one element, as it appears in the
/// sposet-v1 format. `facets[j]` omits `vertices[j]` in the order given here.
struct ElementSpec {
  std::string id;
  std::vector<std::string> vertices;
  std::vector<std::string> facets;

  friend bool operator==(const ElementSpec&, const ElementSpec&) = default;
};

/// Index-based element description used by internal builders (link,
/// barycentric subdivision). Same positional facet convention as ElementSpec.
struct RawElement {
  std::string id;
  std::vector<VertexIndex> vertices;
  std::vector<std::string> facets;
};

/// Finite poset with an implicit minimal element whose lower intervals are
/// Boolean lattices. Face identity is by id, so several simplices may share a
/// vertex set. Immutable after construction; every instance is validated.
class SimplicialPoset {
 public:
  /// Validates an explicit face lattice. `n` defaults to dim + 1.
  /// Throws Error{EmptyInput, DuplicateId, DanglingFaceRef, RankMismatch,
  /// NonBooleanInterval}.
  static SimplicialPoset from_face_lattice(const std::vector<ElementSpec>& spec,
                                           std::optional<int> n = std::nullopt);

  /// Face poset of the simplicial complex generated by the given vertex sets.
  static SimplicialPoset from_facets(const std::vector<std::vector<std::string>>& facets);
  static SimplicialPoset from_facets(const std::vector<std::vector<int>>& facets);

  /// Builder shared by link and barycentric; unlike the public constructors
  /// it accepts an element-free poset (a link of a maximal simplex).
  static SimplicialPoset from_raw(std::vector<std::string> vertex_labels,
                                  std::vector<RawElement> elements, std::optional<int> n,
                                  bool allow_empty);

  /// Same elements, different ambient rank. Throws RankMismatch if n <= dim.
  SimplicialPoset with_rank(int n) const;

  int n() const { return n_; }
  int dim() const { return max_rank_ - 1; }
  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }

  std::span<const SimplexElem> elements() const { return elements_; }
  const SimplexElem& element(ElemIndex i) const { return elements_.at(static_cast<std::size_t>(i)); }
  /// Elements of the given rank (rank >= 1), in canonical order.
  std::span<const ElemIndex> elements_of_rank(int rank) const;
  /// Elements covering `i`, i.e. having `i` as a facet.
  std::span<const ElemIndex> cofacets(ElemIndex i) const { return cofacets_.at(static_cast<std::size_t>(i)); }

  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  std::size_t vertex_count() const { return vertex_labels_.size(); }

  std::optional<ElemIndex> find(std::string_view id) const;
  /// Throws UnknownElement.
  ElemIndex index_of(std::string_view id) const;

  /// The unique face of `i` whose vertex set is `subset` (sorted, nonempty,
  /// contained in the vertex set of `i`).
  ElemIndex face_with_vertices(ElemIndex i, std::span<const VertexIndex> subset) const;

  /// Whether a <= b in the poset.
  bool leq(ElemIndex a, ElemIndex b) const;

  /// (f_{-1}, f_0, ..., f_{n-1}).
  std::vector<std::int64_t> f_vector() const;

  /// Label-based description in canonical order; from_face_lattice(to_spec(), n())
  /// reproduces *this.
  std::vector<ElementSpec> to_spec() const;

  friend bool operator==(const SimplicialPoset& a, const SimplicialPoset& b) {
    return a.n_ == b.n_ && a.vertex_labels_ == b.vertex_labels_ && a.elements_ == b.elements_;
  }

 private:
  SimplicialPoset() = default;

  int n_ = 0;
  int max_rank_ = 0;
  std::vector<std::string> vertex_labels_;
  std::vector<SimplexElem> elements_;
  std::vector<std::vector<ElemIndex>> by_rank_;  // by_rank_[r-1]
  std::vector<std::vector<ElemIndex>> cofacets_;
};

struct PosetStats {
  int dim = -1;
  bool pure = false;
  bool connected = false;
  std::vector<std::int64_t> f;  // f_{-1}..f_{n-1}
};

/// Link of an element: the elements strictly above it, with it as the new
/// minimal element. Vertices of the link are labelled by the ids of the
/// elements covering `id`. Throws UnknownElement.
SimplicialPoset link(const SimplicialPoset& s, std::string_view id);
SimplicialPoset link(const SimplicialPoset& s, ElemIndex i);

/// Order complex of the non-minimal elements: a genuine simplicial complex
/// whose vertices are labelled by element ids.
SimplicialPoset barycentric(const SimplicialPoset& s);

bool is_pure(const SimplicialPoset& s);
/// Connectivity of the barycentric 1-skeleton.
bool is_connected(const SimplicialPoset& s);
PosetStats validate_stats(const SimplicialPoset& s);

/// Throws NotPure unless s is pure of dimension n - 1.
void require_pure_top(const SimplicialPoset& s, std::string_view context);

/// Ordering used for vertex labels: numeric labels numerically, then others
/// lexicographically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace sposet
