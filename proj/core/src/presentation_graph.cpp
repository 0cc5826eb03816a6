#include "artin/presentation_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace artin {

namespace {

constexpr int kBitsPerBlock = 64;

int block_count(int n) { return (n + kBitsPerBlock - 1) / kBitsPerBlock; }

bool valid_vertex_name(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c <= ' ' || c == '#') return false;
  }
  return true;
}

} // namespace

// ---- VertexSet ---------------------------------------------------------

VertexSet::VertexSet(int ambient_size)
    : ambient_(ambient_size), bits_(block_count(ambient_size), 0) {
  if (ambient_size < 0) throw internal_error("VertexSet: negative ambient size");
}

VertexSet VertexSet::all(int ambient_size) {
  VertexSet s(ambient_size);
  for (int v = 0; v < ambient_size; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(const PresentationGraph& g,
                        const std::vector<std::string>& names) {
  VertexSet s(g.vertex_count());
  for (const auto& n : names) s.insert(g.require_vertex(n));
  return s;
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= ambient_) return false;
  return (bits_[v / kBitsPerBlock] >> (v % kBitsPerBlock)) & 1u;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= ambient_)
    throw internal_error("VertexSet::insert: index out of range");
  bits_[v / kBitsPerBlock] |= std::uint64_t{1} << (v % kBitsPerBlock);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= ambient_)
    throw internal_error("VertexSet::erase: index out of range");
  bits_[v / kBitsPerBlock] &= ~(std::uint64_t{1} << (v % kBitsPerBlock));
}

int VertexSet::count() const {
  int total = 0;
  for (auto b : bits_) total += std::popcount(b);
  return total;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (ambient_ != other.ambient_)
    throw internal_error("VertexSet: mismatched ambient graphs");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & other.bits_[i]) return true;
  return false;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  check_compatible(other);
  VertexSet r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= other.bits_[i];
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  check_compatible(other);
  VertexSet r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= other.bits_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  check_compatible(other);
  VertexSet r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~other.bits_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r(ambient_);
  for (int v = 0; v < ambient_; ++v)
    if (!contains(v)) r.insert(v);
  return r;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  check_compatible(other);
  const auto a = elements();
  const auto b = other.elements();
  if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()))
    return std::strong_ordering::less;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()))
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (int v = 0; v < ambient_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

// ---- Partition ---------------------------------------------------------

Partition::Partition(int n, const std::vector<int>& class_ids) : n_(n) {
  if (static_cast<int>(class_ids.size()) != n)
    throw internal_error("Partition: class id vector has wrong length");
  // Normalize class ids to the order of least elements.
  std::map<int, int> remap;
  for (int v = 0; v < n; ++v)
    if (!remap.count(class_ids[v]))
      remap[class_ids[v]] = static_cast<int>(remap.size());
  class_of_.resize(n);
  classes_.assign(remap.size(), VertexSet(n));
  for (int v = 0; v < n; ++v) {
    class_of_[v] = remap.at(class_ids[v]);
    classes_[class_of_[v]].insert(v);
  }
}

int Partition::class_of(int v) const {
  if (v < 0 || v >= n_) throw internal_error("Partition::class_of: out of range");
  return class_of_[v];
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.element_count() != n_)
    throw internal_error("Partition::refines: size mismatch");
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (same_class(u, v) && !coarser.same_class(u, v)) return false;
  return true;
}

// ---- PresentationGraph -------------------------------------------------

PresentationGraph::PresentationGraph(std::vector<std::string> vertices,
                                     const std::vector<NamedEdge>& edges,
                                     std::string name)
    : name_(std::move(name)) {
  for (const auto& v : vertices) {
    if (!valid_vertex_name(v))
      throw input_error("invalid vertex name \"" + v +
                        "\": names must be non-empty, with no whitespace or '#'");
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1])
      throw input_error("duplicate vertex \"" + vertices[i] + "\"");
  }
  names_ = std::move(vertices);

  const int n = vertex_count();
  label_.assign(n, std::vector<Label>(n, 0));
  adj_.assign(n, VertexSet(n));

  for (const auto& e : edges) {
    const int u = require_vertex(e.u);
    const int v = require_vertex(e.v);
    if (u == v)
      throw input_error("self-loop on vertex \"" + e.u + "\" is not allowed");
    if (e.m < 2)
      throw input_error("edge {" + e.u + ", " + e.v + "}: label must be >= 2 (got " +
                        std::to_string(e.m) + ")");
    if (e.m > kMaxLabel)
      throw input_error("edge {" + e.u + ", " + e.v + "}: label " +
                        std::to_string(e.m) + " exceeds the maximum " +
                        std::to_string(kMaxLabel));
    if (label_[u][v] != 0)
      throw input_error("duplicate edge {" + e.u + ", " + e.v + "}");
    label_[u][v] = label_[v][u] = e.m;
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (label_[u][v] != 0) edges_.push_back(Edge{u, v, label_[u][v]});
}

const std::string& PresentationGraph::name_of(int v) const {
  if (v < 0 || v >= vertex_count())
    throw internal_error("PresentationGraph::name_of: index out of range");
  return names_[v];
}

std::optional<int> PresentationGraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it != names_.end() && *it == name)
    return static_cast<int>(it - names_.begin());
  return std::nullopt;
}

int PresentationGraph::require_vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw input_error("unknown vertex \"" + std::string(name) + "\"");
}

bool PresentationGraph::has_edge(int u, int v) const {
  return edge_label(u, v).has_value();
}

std::optional<Label> PresentationGraph::edge_label(int u, int v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
    throw internal_error("PresentationGraph::edge_label: index out of range");
  if (u == v) return std::nullopt;
  const Label m = label_[u][v];
  if (m == 0) return std::nullopt;
  return m;
}

const VertexSet& PresentationGraph::adjacent(int v) const {
  if (v < 0 || v >= vertex_count())
    throw internal_error("PresentationGraph::adjacent: index out of range");
  return adj_[v];
}

bool PresentationGraph::operator==(const PresentationGraph& other) const {
  return names_ == other.names_ && edges_ == other.edges_;
}

std::string PresentationGraph::canonical_key() const {
  std::ostringstream os;
  os << vertex_count() << ';';
  for (const auto& n : names_) os << n << ',';
  os << ';';
  for (const auto& e : edges_)
    os << e.u << '-' << e.v << ':' << e.m << ',';
  return os.str();
}

std::string PresentationGraph::display_name() const {
  if (!name_.empty()) return name_;
  return "graph on " + std::to_string(vertex_count()) + " vertices";
}

// ---- operations --------------------------------------------------------

namespace {

void check_subset(const PresentationGraph& g, const VertexSet& s,
                  const char* where) {
  if (s.ambient_size() != g.vertex_count())
    throw internal_error(std::string(where) +
                         ": vertex set belongs to a different graph");
}

// Union-find for component computations.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  std::vector<int> roots() {
    std::vector<int> r(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) r[i] = find(static_cast<int>(i));
    return r;
  }

private:
  std::vector<int> parent_;
};

} // namespace

VertexSet link(const PresentationGraph& g, const VertexSet& a) {
  check_subset(g, a, "link");
  VertexSet result = g.all_vertices(); // empty intersection convention
  a.for_each([&](int v) { result = result & g.adjacent(v); });
  return result;
}

VertexSet neighbourhood(const PresentationGraph& g, const VertexSet& a) {
  check_subset(g, a, "neighbourhood");
  VertexSet result(g.vertex_count());
  a.for_each([&](int v) {
    result = result | g.adjacent(v);
    result.insert(v);
  });
  return result;
}

VertexSet neighbourhood_within(const PresentationGraph& g, const VertexSet& a,
                               const VertexSet& x) {
  check_subset(g, a, "neighbourhood_within");
  check_subset(g, x, "neighbourhood_within");
  if (!a.is_subset_of(x))
    throw internal_error("neighbourhood_within: set leaves the subgraph");
  VertexSet result(g.vertex_count());
  a.for_each([&](int v) {
    result = result | (g.adjacent(v) & x);
    result.insert(v);
  });
  return result;
}

VertexSet perp(const PresentationGraph& g, const VertexSet& x) {
  check_subset(g, x, "perp");
  if (x.empty()) return g.all_vertices();
  VertexSet result(g.vertex_count());
  for (int s = 0; s < g.vertex_count(); ++s) {
    bool ok = true;
    x.for_each([&](int t) {
      auto m = g.edge_label(std::min(s, t), std::max(s, t));
      if (s == t || !m || *m != 2) ok = false;
    });
    if (ok) result.insert(s);
  }
  return result;
}

PresentationGraph induced_subgraph(const PresentationGraph& g,
                                   const VertexSet& x) {
  check_subset(g, x, "induced_subgraph");
  std::vector<std::string> names;
  for (int v : x.elements()) names.push_back(g.name_of(v));
  std::vector<PresentationGraph::NamedEdge> edges;
  for (const auto& e : g.edges())
    if (x.contains(e.u) && x.contains(e.v))
      edges.push_back({g.name_of(e.u), g.name_of(e.v), e.m});
  return PresentationGraph(std::move(names), edges);
}

Partition odd_components(const PresentationGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges())
    if (e.m % 2 == 1) uf.unite(e.u, e.v);
  return Partition(g.vertex_count(), uf.roots());
}

Partition connected_components(const PresentationGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  return Partition(g.vertex_count(), uf.roots());
}

std::optional<std::pair<int, int>> joined_by_odd_path(
    const PresentationGraph& g, const VertexSet& a, const VertexSet& b) {
  check_subset(g, a, "joined_by_odd_path");
  check_subset(g, b, "joined_by_odd_path");
  const Partition odd = odd_components(g);
  for (int u : a.elements())
    for (int v : b.elements())
      if (odd.same_class(u, v)) return std::make_pair(u, v);
  return std::nullopt;
}

std::optional<std::vector<int>> odd_path(const PresentationGraph& g, int u,
                                         int v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw internal_error("odd_path: vertex index out of range");
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> queue;
  queue.push(u);
  seen[u] = true;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop();
    if (cur == v) break;
    for (int next : g.adjacent(cur).elements()) {
      if (seen[next]) continue;
      const auto m = g.edge_label(cur, next);
      if (!m || *m % 2 == 0) continue;
      seen[next] = true;
      parent[next] = cur;
      queue.push(next);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<int> path;
  for (int cur = v; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<int> diameter(const PresentationGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  int best = 0;
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(n, -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop();
      for (int next : g.adjacent(cur).elements()) {
        if (dist[next] != -1) continue;
        dist[next] = dist[cur] + 1;
        queue.push(next);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] == -1) return std::nullopt; // disconnected
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

bool diameter_at_least(const PresentationGraph& g, int k) {
  const auto d = diameter(g);
  return !d.has_value() || *d >= k;
}

std::string set_to_string(const PresentationGraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ", ";
    out += g.name_of(v);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<std::string> set_to_names(const PresentationGraph& g,
                                      const VertexSet& s) {
  std::vector<std::string> out;
  for (int v : s.elements()) out.push_back(g.name_of(v));
  return out;
}

} // namespace artin
