#ifndef ARTIN_COXETER_HPP
#define ARTIN_COXETER_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "artin/presentation_graph.hpp"

namespace artin {

// Symmetric Coxeter matrix over a vertex subset of a presentation graph:
// 1 on the diagonal, the edge label where an edge exists, infinity for
// non-adjacent pairs. Indices follow the restriction of the graph's
// lexicographic vertex order.
class CoxeterMatrix {
public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  CoxeterMatrix() = default;
  CoxeterMatrix(const PresentationGraph& g, const VertexSet& support);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int entry(int i, int j) const;
  bool has_infinite_entry() const;

  // Restriction to a subset of this matrix's own index space.
  CoxeterMatrix submatrix(const std::vector<int>& indices) const;

  // Components of the Dynkin diagram: edges are the pairs whose entry
  // differs from 2 (labels >= 3 or infinity).
  Partition irreducible_components() const;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> m_;
};

// An irreducible finite Coxeter type.
struct FiniteTypeLabel {
  enum class Family { A, B, D, E, F, H, I2 };
  Family family;
  int rank;
  int m = 0; // edge label, I2 only

  std::string to_string() const;
  friend bool operator==(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
};

// Matches an irreducible Coxeter matrix against the classification of
// finite types by diagram shape; nullopt when the group is infinite.
// Reducible input is a contract violation.
std::optional<FiniteTypeLabel> recognize_finite_type(const CoxeterMatrix& m);

// Per-component recognition results for coxeter_matrix(g, x), with the
// unions X_s (spherical components) and X_as (the rest).
struct SphericityPartition {
  struct Component {
    VertexSet vertices; // in g's indexing
    std::optional<FiniteTypeLabel> type;
    bool spherical() const { return type.has_value(); }
  };
  std::vector<Component> components;
  VertexSet spherical_union;  // X_s
  VertexSet aspherical_union; // X_as
};

CoxeterMatrix coxeter_matrix(const PresentationGraph& g, const VertexSet& x);

SphericityPartition sphericity_partition(const PresentationGraph& g,
                                         const VertexSet& x);

// True iff every irreducible component of the Coxeter matrix on x is a
// finite type; the empty set is spherical.
bool is_spherical(const PresentationGraph& g, const VertexSet& x);

} // namespace artin

#endif // ARTIN_COXETER_HPP
