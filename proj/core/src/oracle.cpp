#include "artin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace artin::oracle {

std::vector<std::vector<double>> gram_matrix(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    gram[i][i] = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const int entry = m.entry(i, j);
      const double value = entry == CoxeterMatrix::kInfinity
                               ? -1.0
                               : -std::cos(std::numbers::pi / entry);
      gram[i][j] = gram[j][i] = value;
    }
  }
  return gram;
}

namespace {

double leading_minor(std::vector<std::vector<double>> a, int k) {
  // Gaussian elimination with partial pivoting on the leading k x k block.
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int row = col + 1; row < k; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < k; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int c = col; c < k; ++c) a[row][c] -= f * a[col][c];
    }
  }
  return det;
}

} // namespace

bool gram_positive_definite(const CoxeterMatrix& m, double tolerance) {
  const auto gram = gram_matrix(m);
  for (int k = 1; k <= m.rank(); ++k)
    if (leading_minor(gram, k) <= tolerance) return false;
  return true;
}

// ---- reflection representation ------------------------------------------

SquareMatrix::SquareMatrix(int dim)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

SquareMatrix SquareMatrix::identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  SquareMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const double f = at(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += f * rhs.at(k, j);
    }
  return out;
}

std::vector<std::int64_t> SquareMatrix::grid_key() const {
  std::vector<std::int64_t> key;
  key.reserve(a_.size());
  for (double v : a_) key.push_back(std::llround(v * 1e6));
  return key;
}

std::variant<CoxeterElementTable, CapExceeded> enumerate_coxeter(
    const CoxeterMatrix& m, std::size_t cap) {
  const int n = m.rank();
  const auto gram = gram_matrix(m);

  CoxeterElementTable table;
  table.rank = n;
  for (int s = 0; s < n; ++s) {
    // sigma_s(alpha_t) = alpha_t - 2 <alpha_s, alpha_t> alpha_s.
    SquareMatrix sigma = SquareMatrix::identity(n);
    for (int t = 0; t < n; ++t) sigma.at(s, t) -= 2.0 * gram[s][t];
    table.generators.push_back(sigma);
  }

  std::map<std::vector<std::int64_t>, std::size_t> seen;
  const SquareMatrix id = SquareMatrix::identity(n);
  seen.emplace(id.grid_key(), 0);
  table.elements.push_back(id);

  for (std::size_t head = 0; head < table.elements.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      SquareMatrix next = table.elements[head] * table.generators[s];
      auto key = next.grid_key();
      if (seen.count(key)) continue;
      if (table.elements.size() >= cap) return CapExceeded{cap};
      seen.emplace(std::move(key), table.elements.size());
      table.elements.push_back(std::move(next));
    }
  }
  return table;
}

bool generators_conjugate_bruteforce(const CoxeterElementTable& table, int s,
                                     int t) {
  if (s < 0 || s >= table.rank || t < 0 || t >= table.rank)
    throw internal_error("generators_conjugate_bruteforce: generator out of range");
  const SquareMatrix& rho_s = table.generators[s];
  const SquareMatrix& rho_t = table.generators[t];
  for (const auto& w : table.elements)
    if ((w * rho_s).grid_key() == (rho_t * w).grid_key()) return true;
  return false;
}

// ---- naive combinatorial oracles ----------------------------------------

namespace {

bool odd_path_search(const PresentationGraph& g, int current,
                     const VertexSet& targets, std::vector<bool>& visited) {
  if (targets.contains(current)) return true;
  for (int next : g.adjacent(current).elements()) {
    if (visited[next]) continue;
    if (*g.edge_label(current, next) % 2 == 0) continue;
    visited[next] = true;
    if (odd_path_search(g, next, targets, visited)) return true;
    visited[next] = false;
  }
  return false;
}

} // namespace

bool brute_force_odd_join(const PresentationGraph& g, const VertexSet& a,
                          const VertexSet& b) {
  const int n = g.vertex_count();
  if (n > 8)
    throw input_error("brute_force_odd_join is limited to 8 vertices");
  if (a.ambient_size() != n || b.ambient_size() != n)
    throw internal_error("brute_force_odd_join: sets from a different graph");
  if (a.intersects(b)) return true;
  for (int start : a.elements()) {
    std::vector<bool> visited(n, false);
    visited[start] = true;
    if (odd_path_search(g, start, b, visited)) return true;
  }
  return false;
}

std::vector<VisualSplitting> brute_force_splittings(const PresentationGraph& g) {
  const int n = g.vertex_count();
  if (n > 6)
    throw input_error("brute_force_splittings is limited to 6 vertices");
  std::vector<VisualSplitting> out;
  for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << n); ++xm)
    for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << n); ++ym) {
      VertexSet x(n), y(n);
      for (int v = 0; v < n; ++v) {
        if ((xm >> v) & 1u) x.insert(v);
        if ((ym >> v) & 1u) y.insert(v);
      }
      const auto checked = validate_splitting(g, x, y);
      if (const auto* s = std::get_if<VisualSplitting>(&checked))
        out.push_back(*s);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace artin::oracle
