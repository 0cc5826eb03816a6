#ifndef ARTIN_PRESENTATION_GRAPH_HPP
#define ARTIN_PRESENTATION_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

// Edge label m_uv >= 2.
using Label = int;

class PresentationGraph;

// Subset of the vertices of a fixed ambient graph, stored as a bitset
// over vertex indices. All set algebra requires matching ambient sizes.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int ambient_size);

  static VertexSet all(int ambient_size);
  // Builds a set from vertex names; unknown names raise input_error.
  static VertexSet of(const PresentationGraph& g,
                      const std::vector<std::string>& names);

  int ambient_size() const { return ambient_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int count() const;
  bool empty() const { return count() == 0; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic order on the ascending element sequence; used for the
  // canonical ordering of splittings and certificate output.
  std::strong_ordering operator<=>(const VertexSet& other) const;

  std::vector<int> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (int v = 0; v < ambient_; ++v)
      if (contains(v)) f(v);
  }

private:
  void check_compatible(const VertexSet& other) const;

  int ambient_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Partition of {0, ..., n-1}; classes are ordered by least element.
class Partition {
public:
  Partition() = default;
  // class_ids[v] identifies v's class; ids are normalized internally.
  Partition(int n, const std::vector<int>& class_ids);

  int element_count() const { return n_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(int v) const;
  bool same_class(int u, int v) const { return class_of(u) == class_of(v); }
  const std::vector<VertexSet>& classes() const { return classes_; }
  const VertexSet& class_set(int v) const { return classes_[class_of(v)]; }

  // True if every class of this partition is contained in one class of
  // the coarser partition.
  bool refines(const Partition& coarser) const;

private:
  int n_ = 0;
  std::vector<int> class_of_;
  std::vector<VertexSet> classes_;
};

// Finite simple labelled graph presenting an Artin group. Vertices are
// identified by case-sensitive names and stored in lexicographic order;
// all indices below refer to that order. Immutable after construction.
class PresentationGraph {
public:
  struct Edge {
    int u, v; // u < v
    Label m;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  struct NamedEdge {
    std::string u, v;
    Label m;
  };

  static constexpr Label kMaxLabel = 1'000'000;

  PresentationGraph() = default;
  PresentationGraph(std::vector<std::string> vertices,
                    const std::vector<NamedEdge>& edges,
                    std::string name = "");

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const;
  std::optional<int> find_vertex(std::string_view name) const;
  int require_vertex(std::string_view name) const;

  const std::string& graph_name() const { return name_; }
  void set_graph_name(std::string name) { name_ = std::move(name); }

  bool has_edge(int u, int v) const;
  std::optional<Label> edge_label(int u, int v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  // link of a single vertex, precomputed.
  const VertexSet& adjacent(int v) const;
  VertexSet all_vertices() const { return VertexSet::all(vertex_count()); }

  // Vertices and labelled edges compared; the display name is metadata
  // and does not participate.
  bool operator==(const PresentationGraph& other) const;

  // Deterministic serialization of the name-sorted labelled graph;
  // memoization key and structural hash.
  std::string canonical_key() const;

  std::string display_name() const; // graph name or a vertex-count stub

private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Label>> label_; // 0 = no edge
  std::vector<VertexSet> adj_;
  std::string name_;
};

// ---- graph-core operations -------------------------------------------

// Intersection of the links of the members of a; link(emptyset) is the
// whole vertex set (empty intersection).
VertexSet link(const PresentationGraph& g, const VertexSet& a);

// Union of closed neighbourhoods link(v) + {v}; neighbourhood(emptyset)
// is empty.
VertexSet neighbourhood(const PresentationGraph& g, const VertexSet& a);

// Neighbourhood of a computed inside the induced subgraph on x,
// expressed in g's indexing. Requires a to be a subset of x.
VertexSet neighbourhood_within(const PresentationGraph& g, const VertexSet& a,
                               const VertexSet& x);

// Vertices joined to every member of x by an edge labelled 2;
// perp(emptyset) is the whole vertex set.
VertexSet perp(const PresentationGraph& g, const VertexSet& x);

// Subgraph on x with exactly the edges of g inside x, labels kept.
PresentationGraph induced_subgraph(const PresentationGraph& g,
                                   const VertexSet& x);

// Connected components of the subgraph of odd-labelled edges. Two
// vertices share a class iff an odd-labelled path (possibly length 0)
// joins them.
Partition odd_components(const PresentationGraph& g);

Partition connected_components(const PresentationGraph& g);

// Some a in A and b in B in the same odd component; returns the first
// such pair in lexicographic scan order, or nullopt. Overlapping sets
// are always joined (length-0 path).
std::optional<std::pair<int, int>> joined_by_odd_path(
    const PresentationGraph& g, const VertexSet& a, const VertexSet& b);

// Shortest path from u to v through odd-labelled edges only (BFS,
// neighbours visited in index order), or nullopt.
std::optional<std::vector<int>> odd_path(const PresentationGraph& g, int u,
                                         int v);

// Graph-theoretic diameter; nullopt means infinite (disconnected or
// empty graph).
std::optional<int> diameter(const PresentationGraph& g);

bool diameter_at_least(const PresentationGraph& g, int k);

// Renders {a, c, d} style set notation with vertex names.
std::string set_to_string(const PresentationGraph& g, const VertexSet& s);
std::vector<std::string> set_to_names(const PresentationGraph& g,
                                      const VertexSet& s);

} // namespace artin

#endif // ARTIN_PRESENTATION_GRAPH_HPP
