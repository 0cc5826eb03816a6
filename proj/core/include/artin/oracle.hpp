#ifndef ARTIN_ORACLE_HPP
#define ARTIN_ORACLE_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/presentation_graph.hpp"
#include "artin/splittings.hpp"

namespace artin::oracle {

// Classical Coxeter bilinear form: 1 on the diagonal and -cos(pi/m_st)
// off it, with infinity mapped to -1.
std::vector<std::vector<double>> gram_matrix(const CoxeterMatrix& m);

// Sylvester test on the leading principal minors; equivalent to the
// Coxeter group being finite.
bool gram_positive_definite(const CoxeterMatrix& m, double tolerance = 1e-9);

// Dense square matrix of the reflection representation.
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim); // zero matrix
  static SquareMatrix identity(int dim);

  int dim() const { return dim_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  SquareMatrix operator*(const SquareMatrix& rhs) const;

  // Entries rounded to a fixed 1e-6 grid; element identity in the
  // enumerated group is equality of keys.
  std::vector<std::int64_t> grid_key() const;

private:
  int dim_ = 0;
  std::vector<double> a_;
};

struct CoxeterElementTable {
  int rank = 0;
  std::vector<SquareMatrix> generators; // one reflection per matrix index
  std::vector<SquareMatrix> elements;   // breadth-first discovery order
  std::size_t order() const { return elements.size(); }
};

struct CapExceeded {
  std::size_t cap;
};

inline constexpr std::size_t kDefaultEnumerationCap = 100'000;

// Breadth-first closure of the generators in the reflection
// representation; CapExceeded signals probable infiniteness or an
// over-budget group.
std::variant<CoxeterElementTable, CapExceeded> enumerate_coxeter(
    const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);

// True iff some table element conjugates generator s to generator t
// (checked as w * rho(s) == rho(t) * w under the grid hash).
bool generators_conjugate_bruteforce(const CoxeterElementTable& table, int s,
                                     int t);

// Naive re-implementation of the odd-join test by enumerating simple
// paths through odd-labelled edges; at most 8 vertices.
bool brute_force_odd_join(const PresentationGraph& g, const VertexSet& a,
                          const VertexSet& b);

// Reference enumeration of visual splittings over every (X, Y) subset
// pair; at most 6 vertices.
std::vector<VisualSplitting> brute_force_splittings(const PresentationGraph& g);

} // namespace artin::oracle

#endif // ARTIN_ORACLE_HPP
