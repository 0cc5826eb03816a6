#include "artin/coxeter.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

CoxeterMatrix::CoxeterMatrix(const PresentationGraph& g,
                             const VertexSet& support) {
  if (support.ambient_size() != g.vertex_count())
    throw internal_error("CoxeterMatrix: vertex set belongs to a different graph");
  const auto verts = support.elements();
  names_.reserve(verts.size());
  for (int v : verts) names_.push_back(g.name_of(v));
  const int n = static_cast<int>(verts.size());
  m_.assign(n, std::vector<int>(n, kInfinity));
  for (int i = 0; i < n; ++i) {
    m_[i][i] = 1;
    for (int j = i + 1; j < n; ++j) {
      const auto label = g.edge_label(verts[i], verts[j]);
      m_[i][j] = m_[j][i] = label ? *label : kInfinity;
    }
  }
}

int CoxeterMatrix::entry(int i, int j) const {
  if (i < 0 || i >= rank() || j < 0 || j >= rank())
    throw internal_error("CoxeterMatrix::entry: index out of range");
  return m_[i][j];
}

bool CoxeterMatrix::has_infinite_entry() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (m_[i][j] == kInfinity) return true;
  return false;
}

CoxeterMatrix CoxeterMatrix::submatrix(const std::vector<int>& indices) const {
  CoxeterMatrix out;
  for (int i : indices) {
    if (i < 0 || i >= rank())
      throw internal_error("CoxeterMatrix::submatrix: index out of range");
    out.names_.push_back(names_[i]);
  }
  const int n = static_cast<int>(indices.size());
  out.m_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.m_[i][j] = m_[indices[i]][indices[j]];
  return out;
}

Partition CoxeterMatrix::irreducible_components() const {
  const int n = rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m_[i][j] != 2) parent[find(i)] = find(j);
  std::vector<int> ids(n);
  for (int v = 0; v < n; ++v) ids[v] = find(v);
  return Partition(n, ids);
}

std::string FiniteTypeLabel::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

namespace {

using Family = FiniteTypeLabel::Family;

// Walks the unique path of a tree-shaped Dynkin diagram from the leaf
// `start`, returning the label sequence.
std::vector<int> path_labels(const CoxeterMatrix& m,
                             const std::vector<std::vector<int>>& dynkin_adj,
                             int start) {
  std::vector<int> labels;
  int prev = -1, cur = start;
  for (;;) {
    int next = -1;
    for (int cand : dynkin_adj[cur])
      if (cand != prev) next = cand;
    if (next == -1) break;
    labels.push_back(m.entry(cur, next));
    prev = cur;
    cur = next;
  }
  return labels;
}

std::optional<FiniteTypeLabel> recognize_path(const CoxeterMatrix& m,
                                              std::vector<int> labels) {
  const int n = m.rank();
  {
    // Normalize direction so a lone 4 or 5 sits as early as possible.
    auto reversed = labels;
    std::reverse(reversed.begin(), reversed.end());
    labels = std::max(labels, reversed);
  }
  if (n == 2) return FiniteTypeLabel{Family::I2, 2, labels[0]};

  int fours = 0, fives = 0;
  for (int l : labels) {
    if (l >= 6) return std::nullopt;
    if (l == 4) ++fours;
    if (l == 5) ++fives;
  }
  if (fives > 0) {
    if (fives > 1 || fours > 0) return std::nullopt;
    if (labels.front() != 5) return std::nullopt; // normalized: 5 leads
    bool rest_three = std::all_of(labels.begin() + 1, labels.end(),
                                  [](int l) { return l == 3; });
    if (!rest_three) return std::nullopt;
    if (n == 3) return FiniteTypeLabel{Family::H, 3};
    if (n == 4) return FiniteTypeLabel{Family::H, 4};
    return std::nullopt;
  }
  if (fours > 0) {
    if (fours > 1) return std::nullopt;
    const auto pos = static_cast<int>(
        std::find(labels.begin(), labels.end(), 4) - labels.begin());
    if (pos == 0) return FiniteTypeLabel{Family::B, n};
    if (n == 4 && pos == 1) return FiniteTypeLabel{Family::F, 4};
    return std::nullopt;
  }
  return FiniteTypeLabel{Family::A, n};
}

std::optional<FiniteTypeLabel> recognize_branched(
    const CoxeterMatrix& m, const std::vector<std::vector<int>>& dynkin_adj,
    int centre) {
  const int n = m.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.entry(i, j) != 2 && m.entry(i, j) != 3) return std::nullopt;

  std::vector<int> arms;
  for (int first : dynkin_adj[centre]) {
    int len = 1, prev = centre, cur = first;
    for (;;) {
      int next = -1;
      for (int cand : dynkin_adj[cur])
        if (cand != prev) next = cand;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return std::nullopt;
  if (arms[0] == 1 && arms[1] == 1) return FiniteTypeLabel{Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return FiniteTypeLabel{Family::E, arms[2] + 4};
  return std::nullopt;
}

} // namespace

std::optional<FiniteTypeLabel> recognize_finite_type(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n == 0)
    throw internal_error("recognize_finite_type: empty matrix");
  if (m.irreducible_components().class_count() != 1)
    throw internal_error("recognize_finite_type: matrix is reducible");
  if (n == 1) return FiniteTypeLabel{Family::A, 1};
  if (m.has_infinite_entry()) return std::nullopt;

  std::vector<std::vector<int>> dynkin_adj(n);
  int edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.entry(i, j) != 2) {
        dynkin_adj[i].push_back(j);
        dynkin_adj[j].push_back(i);
        ++edge_count;
      }
  if (edge_count != n - 1) return std::nullopt; // connected with a cycle

  int branch = -1, branch_count = 0;
  for (int v = 0; v < n; ++v) {
    const auto deg = dynkin_adj[v].size();
    if (deg > 3) return std::nullopt;
    if (deg == 3) {
      branch = v;
      ++branch_count;
    }
  }
  if (branch_count > 1) return std::nullopt;
  if (branch_count == 1) return recognize_branched(m, dynkin_adj, branch);

  int leaf = 0;
  for (int v = 0; v < n; ++v)
    if (dynkin_adj[v].size() == 1) {
      leaf = v;
      break;
    }
  return recognize_path(m, path_labels(m, dynkin_adj, leaf));
}

CoxeterMatrix coxeter_matrix(const PresentationGraph& g, const VertexSet& x) {
  return CoxeterMatrix(g, x);
}

SphericityPartition sphericity_partition(const PresentationGraph& g,
                                         const VertexSet& x) {
  const CoxeterMatrix m = coxeter_matrix(g, x);
  const auto verts = x.elements(); // matrix index -> g index
  const Partition comps = m.irreducible_components();

  SphericityPartition out;
  out.spherical_union = VertexSet(g.vertex_count());
  out.aspherical_union = VertexSet(g.vertex_count());
  for (const auto& cls : comps.classes()) {
    SphericityPartition::Component comp;
    comp.vertices = VertexSet(g.vertex_count());
    const auto idx = cls.elements();
    for (int i : idx) comp.vertices.insert(verts[i]);
    comp.type = recognize_finite_type(m.submatrix(idx));
    (comp.spherical() ? out.spherical_union : out.aspherical_union) =
        (comp.spherical() ? out.spherical_union : out.aspherical_union) |
        comp.vertices;
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_spherical(const PresentationGraph& g, const VertexSet& x) {
  const CoxeterMatrix m = coxeter_matrix(g, x);
  const Partition comps = m.irreducible_components();
  for (const auto& cls : comps.classes())
    if (!recognize_finite_type(m.submatrix(cls.elements())))
      return false;
  return true;
}

} // namespace artin
