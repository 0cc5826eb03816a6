#ifndef ARTIN_SPLITTINGS_HPP
#define ARTIN_SPLITTINGS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "artin/classes.hpp"
#include "artin/presentation_graph.hpp"

namespace artin {

// Visual splitting of the Artin group of a fixed graph: X and Y cover
// the vertices, Z = X n Y separates, and neither side is everything.
// Stored unordered with the lexicographically smaller side first.
struct VisualSplitting {
  VertexSet x, y, z;

  friend bool operator==(const VisualSplitting&, const VisualSplitting&) = default;
  friend bool operator<(const VisualSplitting& a, const VisualSplitting& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

struct SplittingViolation {
  enum class Kind { CoverFailure, Trivial, SeparationFailure };
  Kind kind;
  std::optional<std::string> missing_vertex;  // CoverFailure
  std::optional<std::string> full_side;       // Trivial: "X", "Y" or "both"
  std::optional<std::pair<std::string, std::string>> crossing_edge;
  std::string message() const;
};

using SplittingCheck = std::variant<VisualSplitting, SplittingViolation>;

// Validates (X, Y) as a visual splitting; violations are returned as
// values, each with its witness.
SplittingCheck validate_splitting(const PresentationGraph& g,
                                  const VertexSet& x, const VertexSet& y);

// Wrapper that throws input_error on violation.
VisualSplitting require_splitting(const PresentationGraph& g,
                                  const VertexSet& x, const VertexSet& y);

enum class SplittingMode { All, VertexPairs };

inline constexpr int kDefaultSplittingCap = 16;

// All visual splittings in canonical order. Mode All enumerates every
// separating subset Z with every bipartition of the remaining components
// (refused above the cap); mode VertexPairs only the splittings
// (S\{b}, S\{a}) for non-adjacent pairs a, b.
std::vector<VisualSplitting> enumerate_splittings(
    const PresentationGraph& g, SplittingMode mode,
    int all_mode_cap = kDefaultSplittingCap);

// Outcome of the odd-path criterion for one splitting.
struct CriterionResult {
  bool holds;
  // When the criterion fails: a pair (x', y') with x' in N_{G_X}(X\Z),
  // y' in N_{G_Y}(Y\Z), plus the odd path joining them (may be a single
  // vertex when x' = y').
  std::optional<std::pair<int, int>> witness;
  std::vector<int> path;
  // The two neighbourhoods the test compares.
  VertexSet side_x_neighbourhood, side_y_neighbourhood;
};

// Decides whether N_{G_X}(X\Z) and N_{G_Y}(Y\Z) are free of odd-labelled
// paths between them.
CriterionResult criterion(const PresentationGraph& g, const VisualSplitting& s);

// Letter of a word in the Artin group's generators.
struct GeneratorLetter {
  std::string generator;
  bool inverse = false;
  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};
using Word = std::vector<GeneratorLetter>;

std::string word_to_string(const Word& w);

// Alternating positive word u v u v ... of the given length.
Word alternating_word(const std::string& u, const std::string& v, int length);

// The explicit element g^-1 z_{y,y'} g z_{x,x'} of Lemma-style
// non-acylindricity: g conjugates x' to y' along the recorded odd path,
// and the z factors generate the centres of the dihedral subgroups on
// {x, x'} and {y, y'}.
struct WitnessWord {
  enum class CentreKind { Generator, Delta, DeltaSquared };

  std::string x, x_prime, y, y_prime;
  std::vector<std::string> path; // x' ... y', odd labels throughout
  Word conjugator;               // g, flattened
  Word z_x, z_y;
  CentreKind z_x_kind, z_y_kind;

  Word word() const; // g^-1 . z_y . g . z_x
  std::string to_string() const;
};

// Builds the witness word from a failed criterion; calling it on a
// splitting whose criterion holds is a contract violation. The dihedral
// identity behind each conjugating factor is re-checked literally.
WitnessWord witness_word(const PresentationGraph& g, const VisualSplitting& s,
                         const CriterionResult& failure);

enum class Verdict { Acylindrical, NotAcylindrical, CriterionHoldsHypothesisUnknown };

std::string verdict_to_string(Verdict v);

// Layered outcome for one visual splitting: the combinatorial criterion,
// then PIP/RP certification of both sides, then the final verdict with
// the constants (k, C) = (3, 1).
struct AcylindricityVerdict {
  static constexpr int kPathLength = 3; // k
  static constexpr int kStabiliserBound = 1; // C

  CriterionResult criterion;
  PipRpEvidence hypothesis_x, hypothesis_y;
  Verdict verdict;
  std::optional<WitnessWord> witness; // NotAcylindrical only
};

struct SupersetPair {
  std::optional<PresentationGraph> for_x, for_y;
};

AcylindricityVerdict theorem_verdict(
    const PresentationGraph& g, const VisualSplitting& s,
    const PipRpRegistry& registry = PipRpRegistry::defaults(),
    const SupersetPair& supersets = {});

// All unordered vertex pairs whose neighbourhoods are not joined by an
// odd-labelled path; each yields an acylindrical-criterion splitting
// (S\{b}, S\{a}).
std::vector<std::pair<int, int>> pair_criterion(const PresentationGraph& g);

// For even graphs only: the criterion-level test reduces to the diameter
// being at least 3 (infinite included).
bool even_diameter_criterion(const PresentationGraph& g);

} // namespace artin

#endif // ARTIN_SPLITTINGS_HPP
