#include "artin/tits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json_util.hpp"

namespace artin {

BaseClassRegistry BaseClassRegistry::defaults() {
  BaseClassRegistry reg;
  reg.rules.push_back(
      {"Spherical",
       "spherical Artin groups are linear in characteristic zero "
       "(Cohen-Wales), and linear groups satisfy the strong Tits "
       "alternative (Tits)",
       [](const PresentationGraph& g) { return is_spherical(g, g.all_vertices()); }});
  reg.rules.push_back(
      {"FCType",
       "FC-type Artin groups satisfy the strong Tits alternative "
       "(Martin-Przytycki)",
       [](const PresentationGraph& g) { return is_fc_type(g).value; }});
  reg.rules.push_back(
      {"TwoDimensional",
       "2-dimensional Artin groups satisfy the strong Tits alternative "
       "(Martin)",
       [](const PresentationGraph& g) { return is_two_dimensional(g).value; }});
  reg.rules.push_back(
      {"LargeType",
       "large-type Artin groups satisfy the strong Tits alternative "
       "(Osajda-Przytycki)",
       [](const PresentationGraph& g) { return is_large_type(g).value; }});
  return reg;
}

BaseClassRegistry BaseClassRegistry::from_tags(
    const std::vector<std::string>& tags) {
  const BaseClassRegistry all = defaults();
  BaseClassRegistry reg;
  for (const auto& tag : tags) {
    const BaseClassRule* rule = all.find(tag);
    if (!rule) {
      std::string known;
      for (const auto& r : all.rules) known += (known.empty() ? "" : ", ") + r.tag;
      throw input_error("unknown base class \"" + tag + "\" (known: " + known + ")");
    }
    reg.rules.push_back(*rule);
  }
  return reg;
}

const BaseClassRule* BaseClassRegistry::find(const std::string& tag) const {
  for (const auto& rule : rules)
    if (rule.tag == tag) return &rule;
  return nullptr;
}

bool TitsCertificate::complete() const {
  switch (status) {
    case Status::Base: return true;
    case Status::Unknown: return false;
    case Status::Split:
      return std::all_of(children.begin(), children.end(),
                         [](const TitsCertificate& c) { return c.complete(); });
  }
  return false;
}

int TitsCertificate::depth() const {
  if (status != Status::Split) return 0;
  int best = 0;
  for (const auto& child : children) best = std::max(best, child.depth());
  return best + 1;
}

// ---- certify -------------------------------------------------------------

namespace {

class CertifySearch {
public:
  CertifySearch(const BaseClassRegistry& registry, const CertifyOptions& options)
      : registry_(registry), options_(options) {}

  TitsCertificate run(const PresentationGraph& g, int depth_left) {
    const std::string key = g.canonical_key();
    if (options_.memoize) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    for (const auto& rule : registry_.rules) {
      if (rule.predicate(g)) {
        TitsCertificate cert;
        cert.graph = g;
        cert.status = TitsCertificate::Status::Base;
        cert.base_class = rule.tag;
        cert.citation = rule.citation;
        if (options_.memoize) memo_.emplace(key, cert);
        return cert;
      }
    }

    if (depth_left <= 0) {
      TitsCertificate cert;
      cert.graph = g;
      cert.status = TitsCertificate::Status::Unknown;
      cert.summary = "depth limit reached before any splitting was examined";
      cert.depth_limited = true;
      return cert;
    }

    // Vertex-pair splittings first, then everything else.
    std::vector<VisualSplitting> splittings =
        enumerate_splittings(g, SplittingMode::VertexPairs);
    bool cap_refused = false;
    try {
      for (auto& s : enumerate_splittings(g, SplittingMode::All, options_.split_cap))
        if (!std::binary_search(splittings.begin(), splittings.end(), s))
          splittings.push_back(std::move(s));
    } catch (const input_error&) {
      cap_refused = true;
    }

    int examined = 0;
    int acylindrical = 0;
    bool child_depth_limited = false;
    for (const auto& s : splittings) {
      const AcylindricityVerdict verdict = theorem_verdict(g, s, options_.pip_rp);
      ++examined;
      if (verdict.verdict != Verdict::Acylindrical) continue;
      ++acylindrical;

      TitsCertificate left = run(induced_subgraph(g, s.x), depth_left - 1);
      TitsCertificate right = run(induced_subgraph(g, s.y), depth_left - 1);
      if (left.complete() && right.complete()) {
        TitsCertificate cert;
        cert.graph = g;
        cert.status = TitsCertificate::Status::Split;
        cert.splitting = s;
        cert.verdict = verdict;
        cert.children.push_back(std::move(left));
        cert.children.push_back(std::move(right));
        if (options_.memoize) memo_.emplace(key, cert);
        return cert;
      }
      child_depth_limited |= left.depth_limited || right.depth_limited;
    }

    TitsCertificate cert;
    cert.graph = g;
    cert.status = TitsCertificate::Status::Unknown;
    std::ostringstream summary;
    summary << "no base class matched; examined " << examined
            << " visual splittings (" << acylindrical << " acylindrical)";
    if (cap_refused)
      summary << "; full enumeration refused by the size cap "
              << options_.split_cap;
    if (child_depth_limited) summary << "; some branches hit the depth limit";
    cert.summary = summary.str();
    cert.depth_limited = child_depth_limited;
    if (options_.memoize && !child_depth_limited && !cap_refused)
      memo_.emplace(key, cert);
    return cert;
  }

private:
  const BaseClassRegistry& registry_;
  const CertifyOptions& options_;
  std::map<std::string, TitsCertificate> memo_;
};

} // namespace

TitsCertificate certify(const PresentationGraph& g,
                        const BaseClassRegistry& registry,
                        const CertifyOptions& options) {
  CertifySearch search(registry, options);
  return search.run(g, options.max_depth);
}

// ---- rendering -----------------------------------------------------------

namespace {

using nlohmann::json;

void render_text_node(const TitsCertificate& c, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string verts = set_to_string(c.graph, c.graph.all_vertices());
  switch (c.status) {
    case TitsCertificate::Status::Base:
      os << pad << "base " << verts << ": " << c.base_class << " -- "
         << c.citation << "\n";
      break;
    case TitsCertificate::Status::Split: {
      os << pad << "split " << verts
         << ": X = " << set_to_string(c.graph, c.splitting->x)
         << ", Y = " << set_to_string(c.graph, c.splitting->y)
         << ", Z = " << set_to_string(c.graph, c.splitting->z)
         << " -- (3,1)-acylindrical (X: " << c.verdict->hypothesis_x.rule
         << ", Y: " << c.verdict->hypothesis_y.rule << ")\n";
      for (const auto& child : c.children) render_text_node(child, indent + 1, os);
      break;
    }
    case TitsCertificate::Status::Unknown:
      os << pad << "unknown " << verts << ": " << c.summary << "\n";
      break;
  }
}

json certificate_to_json(const TitsCertificate& c) {
  json j;
  j["graph"] = detail::graph_to_json(c.graph);
  switch (c.status) {
    case TitsCertificate::Status::Base:
      j["status"] = "base";
      j["base_class"] = c.base_class;
      j["citation"] = c.citation;
      break;
    case TitsCertificate::Status::Split: {
      j["status"] = "split";
      j["splitting"] = detail::splitting_to_json(c.graph, *c.splitting);
      json verdict;
      verdict["criterion"] = c.verdict->criterion.holds ? "holds" : "fails";
      verdict["k"] = AcylindricityVerdict::kPathLength;
      verdict["c"] = AcylindricityVerdict::kStabiliserBound;
      verdict["hypothesis_x"] = detail::evidence_to_json(c.verdict->hypothesis_x);
      verdict["hypothesis_y"] = detail::evidence_to_json(c.verdict->hypothesis_y);
      j["verdict"] = std::move(verdict);
      j["children"] = json::array();
      for (const auto& child : c.children)
        j["children"].push_back(certificate_to_json(child));
      break;
    }
    case TitsCertificate::Status::Unknown:
      j["status"] = "unknown";
      j["summary"] = c.summary;
      j["depth_limited"] = c.depth_limited;
      break;
  }
  return j;
}

TitsCertificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("status"))
    throw input_error("certificate: expected {\"graph\", \"status\", ...}");
  TitsCertificate c;
  c.graph = detail::graph_from_json(j["graph"]);
  const std::string status = j["status"].get<std::string>();
  if (status == "base") {
    c.status = TitsCertificate::Status::Base;
    c.base_class = j.value("base_class", "");
    c.citation = j.value("citation", "");
    if (c.base_class.empty())
      throw input_error("certificate: base node without base_class");
  } else if (status == "split") {
    c.status = TitsCertificate::Status::Split;
    if (!j.contains("splitting") || !j.contains("verdict") || !j.contains("children"))
      throw input_error("certificate: split node needs splitting, verdict, children");
    const json& sj = j["splitting"];
    VisualSplitting s;
    s.x = VertexSet::of(c.graph, sj["x"].get<std::vector<std::string>>());
    s.y = VertexSet::of(c.graph, sj["y"].get<std::vector<std::string>>());
    s.z = VertexSet::of(c.graph, sj["z"].get<std::vector<std::string>>());
    if (s.z != (s.x & s.y))
      throw input_error("certificate: splitting z differs from x n y");
    c.splitting = s;
    const json& vj = j["verdict"];
    AcylindricityVerdict v;
    v.criterion.holds = vj["criterion"].get<std::string>() == "holds";
    v.hypothesis_x = detail::evidence_from_json(vj["hypothesis_x"]);
    v.hypothesis_y = detail::evidence_from_json(vj["hypothesis_y"]);
    v.verdict = v.criterion.holds && v.hypothesis_x.certified &&
                        v.hypothesis_y.certified
                    ? Verdict::Acylindrical
                    : Verdict::CriterionHoldsHypothesisUnknown;
    c.verdict = std::move(v);
    if (!j["children"].is_array() || j["children"].size() != 2)
      throw input_error("certificate: split node needs exactly two children");
    for (const auto& child : j["children"])
      c.children.push_back(certificate_from_json(child));
  } else if (status == "unknown") {
    c.status = TitsCertificate::Status::Unknown;
    c.summary = j.value("summary", "");
    c.depth_limited = j.value("depth_limited", false);
  } else {
    throw input_error("certificate: unknown status \"" + status + "\"");
  }
  return c;
}

} // namespace

std::string render_certificate(const TitsCertificate& c, CertificateFormat format) {
  if (format == CertificateFormat::Json)
    return detail::dump(certificate_to_json(c));
  std::ostringstream os;
  os << "strong Tits alternative certificate for " << c.graph.display_name()
     << ": " << (c.complete() ? "complete" : "incomplete") << " (depth "
     << c.depth() << ")\n";
  render_text_node(c, 0, os);
  return os.str();
}

TitsCertificate parse_certificate_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("certificate JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

// ---- independent checker --------------------------------------------------

namespace {

CheckOutcome fail(const std::string& message) { return {false, message}; }

CheckOutcome check_node(const TitsCertificate& c,
                        const BaseClassRegistry& registry,
                        const PipRpRegistry& pip_rp) {
  const std::string where = "node " +
      set_to_string(c.graph, c.graph.all_vertices());
  switch (c.status) {
    case TitsCertificate::Status::Unknown:
      return fail(where + ": certificate is not complete");
    case TitsCertificate::Status::Base: {
      const BaseClassRule* rule = registry.find(c.base_class);
      if (!rule) return fail(where + ": base class \"" + c.base_class +
                             "\" is not in the registry");
      if (rule->citation != c.citation)
        return fail(where + ": citation differs from the registry");
      if (!rule->predicate(c.graph))
        return fail(where + ": predicate " + c.base_class + " does not hold");
      return {true, ""};
    }
    case TitsCertificate::Status::Split: {
      if (!c.splitting || !c.verdict || c.children.size() != 2)
        return fail(where + ": malformed split node");
      const auto checked = validate_splitting(c.graph, c.splitting->x, c.splitting->y);
      const auto* s = std::get_if<VisualSplitting>(&checked);
      if (!s)
        return fail(where + ": " +
                    std::get<SplittingViolation>(checked).message());
      if (!(*s == *c.splitting))
        return fail(where + ": splitting is not in canonical form");
      if (!criterion(c.graph, *s).holds)
        return fail(where + ": odd-path criterion fails");

      const PresentationGraph gx = induced_subgraph(c.graph, s->x);
      const PresentationGraph gy = induced_subgraph(c.graph, s->y);
      struct Side {
        const char* label;
        const PresentationGraph* side_graph;
        const PipRpEvidence* evidence;
        const PresentationGraph* child;
      };
      const Side sides[2] = {
          {"X", &gx, &c.verdict->hypothesis_x, &c.children[0].graph},
          {"Y", &gy, &c.verdict->hypothesis_y, &c.children[1].graph}};
      for (const auto& side : sides) {
        if (!side.evidence->certified)
          return fail(where + ": hypothesis for " + side.label +
                      " is not certified");
        if (side.evidence->rule == kRuleUserSuperset) {
          if (!side.evidence->superset)
            return fail(where + ": UserSuperset evidence without a superset");
          if (!induced_embedding(*side.side_graph, *side.evidence->superset))
            return fail(where + ": side " + side.label +
                        " does not embed into its superset");
          const PipRpRule* rule = pip_rp.find(side.evidence->superset_rule);
          if (!rule || !rule->holds(*side.evidence->superset))
            return fail(where + ": superset rule \"" +
                        side.evidence->superset_rule + "\" does not hold");
        } else {
          const PipRpRule* rule = pip_rp.find(side.evidence->rule);
          if (!rule)
            return fail(where + ": hypothesis rule \"" + side.evidence->rule +
                        "\" is not in the registry");
          if (!rule->holds(*side.side_graph))
            return fail(where + ": hypothesis rule " + side.evidence->rule +
                        " does not hold for side " + side.label);
        }
        if (!(*side.child == *side.side_graph))
          return fail(where + ": child graph is not the induced subgraph on " +
                      side.label);
      }
      for (const auto& child : c.children) {
        const CheckOutcome sub = check_node(child, registry, pip_rp);
        if (!sub.ok) return sub;
      }
      return {true, ""};
    }
  }
  return fail("corrupt certificate node");
}

} // namespace

CheckOutcome check_certificate(const TitsCertificate& c,
                               const BaseClassRegistry& registry,
                               const PipRpRegistry& pip_rp) {
  return check_node(c, registry, pip_rp);
}

} // namespace artin
