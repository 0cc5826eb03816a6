#ifndef ARTIN_TITS_HPP
#define ARTIN_TITS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artin/presentation_graph.hpp"
#include "artin/splittings.hpp"

namespace artin {

// Graph-checkable class known to satisfy the strong Tits alternative,
// with the literature citation reported on certificate leaves.
struct BaseClassRule {
  std::string tag;
  std::string citation;
  std::function<bool(const PresentationGraph&)> predicate;
};

struct BaseClassRegistry {
  std::vector<BaseClassRule> rules;

  // Spherical, FCType, TwoDimensional, LargeType, in that order.
  static BaseClassRegistry defaults();
  // Restriction of the default registry to the given tags, kept in the
  // given order; unknown tags raise input_error.
  static BaseClassRegistry from_tags(const std::vector<std::string>& tags);
  const BaseClassRule* find(const std::string& tag) const;
};

// Recursive certificate that a group satisfies the strong Tits
// alternative: leaves cite base classes, internal nodes carry certified
// acylindrical visual splittings, and Unknown marks an honest search
// failure (never a disproof).
struct TitsCertificate {
  enum class Status { Base, Split, Unknown };

  PresentationGraph graph;
  Status status = Status::Unknown;

  // Base
  std::string base_class;
  std::string citation;

  // Split (sets indexed against this node's graph)
  std::optional<VisualSplitting> splitting;
  std::optional<AcylindricityVerdict> verdict;
  std::vector<TitsCertificate> children; // exactly two for Split

  // Unknown
  std::string summary;
  bool depth_limited = false;

  bool complete() const;
  int depth() const;
};

struct CertifyOptions {
  int max_depth = 64;
  bool memoize = true;
  int split_cap = kDefaultSplittingCap;
  PipRpRegistry pip_rp = PipRpRegistry::defaults();
};

// Depth-first search for a complete certificate: base classes in
// registry order first, then acylindrical visual splittings (vertex-pair
// splittings before the full enumeration), recursing on both sides with
// memoization on the name-sorted labelled graph. Deterministic.
TitsCertificate certify(const PresentationGraph& g,
                        const BaseClassRegistry& registry = BaseClassRegistry::defaults(),
                        const CertifyOptions& options = {});

enum class CertificateFormat { Text, Json };

// Text form cites each base class; JSON follows the documented schema
// and round-trips byte-identically through parse_certificate_json.
std::string render_certificate(const TitsCertificate& c, CertificateFormat format);

TitsCertificate parse_certificate_json(const std::string& text);

struct CheckOutcome {
  bool ok;
  std::string message; // empty when ok
};

// Independent re-validation: walks a certificate and re-verifies every
// base predicate, splitting, criterion and hypothesis from scratch.
// Certificates containing Unknown nodes are rejected as incomplete.
CheckOutcome check_certificate(const TitsCertificate& c,
                               const BaseClassRegistry& registry = BaseClassRegistry::defaults(),
                               const PipRpRegistry& pip_rp = PipRpRegistry::defaults());

} // namespace artin

#endif // ARTIN_TITS_HPP
