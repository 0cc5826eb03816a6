#ifndef ARTIN_CLASSES_HPP
#define ARTIN_CLASSES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/presentation_graph.hpp"

namespace artin {

// ---- class predicates --------------------------------------------------

struct EdgeWitness {
  std::string u, v;
  Label m;
};

// Vertex carrying two incident 2-labelled edges.
struct TwoTwoWitness {
  std::string vertex;
  std::string first_neighbour, second_neighbour;
};

struct EdgeFlag {
  bool value;
  std::optional<EdgeWitness> witness; // offending edge when false
};

struct TwoTwoFlag {
  bool value;
  std::optional<TwoTwoWitness> witness;
};

struct SubsetFlag {
  bool value;
  std::optional<VertexSet> witness; // offending vertex subset when false
};

EdgeFlag is_right_angled(const PresentationGraph& g); // all labels 2
EdgeFlag is_even(const PresentationGraph& g);         // all labels even
EdgeFlag is_large_type(const PresentationGraph& g);   // all labels >= 3
TwoTwoFlag is_two_two_free(const PresentationGraph& g);

// No 3-element subset spherical; witness is a spherical triple.
SubsetFlag is_two_dimensional(const PresentationGraph& g);

// Every maximal clique spherical (Bron-Kerbosch enumeration); witness is
// a non-spherical clique.
SubsetFlag is_fc_type(const PresentationGraph& g);

// Aggregated report with one witness per failing class.
struct ClassReport {
  EdgeFlag right_angled, even, large_type;
  TwoTwoFlag two_two_free;
  SubsetFlag two_dimensional, fc_type;
  bool spherical;
  std::optional<VertexSet> non_spherical_component;
  bool reducible;
  std::vector<VertexSet> irreducible_components; // over the whole vertex set
};

ClassReport classify(const PresentationGraph& g);

// ---- PIP/RP certification ----------------------------------------------

// One registry rule: a graph class for which both the parabolic
// intersection property and the ribbon property are on record.
struct PipRpRule {
  std::string id;
  std::string description;
  std::function<bool(const PresentationGraph&)> holds;
};

struct PipRpRegistry {
  std::vector<PipRpRule> rules;
  // Spherical, EvenFC, TwoDimTwoTwoFree; rules can be dropped or added
  // per call.
  static PipRpRegistry defaults();
  const PipRpRule* find(const std::string& id) const;
};

inline constexpr const char* kRuleSpherical = "Spherical";
inline constexpr const char* kRuleEvenFc = "EvenFC";
inline constexpr const char* kRuleTwoDimTwoTwoFree = "TwoDimTwoTwoFree";
inline constexpr const char* kRuleUserSuperset = "UserSuperset";

struct PipRpEvidence {
  bool certified = false;
  std::string rule; // registry rule id, or "UserSuperset"
  // UserSuperset only: the ambient graph, the rule it satisfied, and the
  // label-preserving induced embedding (vertex name -> superset name).
  std::optional<PresentationGraph> superset;
  std::string superset_rule;
  std::vector<std::pair<std::string, std::string>> embedding;

  static PipRpEvidence unknown() { return {}; }
};

// Injective vertex map g -> h preserving labelled edges and non-edges
// (backtracking search, lexicographically least); nullopt if none.
std::optional<std::vector<int>> induced_embedding(const PresentationGraph& g,
                                                  const PresentationGraph& h);

// Certifies PIP and RP for the Artin group of g: first against the
// registry rules directly, then (when given) through a superset graph
// that g induced-embeds into. A superset that does not contain g as an
// induced labelled subgraph is an input error, not an Unknown outcome.
PipRpEvidence pip_rp_certificate(
    const PresentationGraph& g,
    const std::optional<PresentationGraph>& superset = std::nullopt,
    const PipRpRegistry& registry = PipRpRegistry::defaults());

} // namespace artin

#endif // ARTIN_CLASSES_HPP
