#include "json_util.hpp"

namespace artin::detail {

using nlohmann::json;

json graph_to_json(const PresentationGraph& g) {
  json j;
  if (!g.graph_name().empty()) j["name"] = g.graph_name();
  j["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", g.name_of(e.u)}, {"v", g.name_of(e.v)}, {"m", e.m}});
  j["edges"] = std::move(edges);
  return j;
}

PresentationGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw input_error("graph: expected a JSON object");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw input_error("graph.name: expected a string");
    name = j["name"].get<std::string>();
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw input_error("graph.vertices: expected an array of strings");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw input_error("graph.vertices: expected strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<PresentationGraph::NamedEdge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw input_error("graph.edges: expected an array");
    int index = 0;
    for (const auto& e : j["edges"]) {
      const std::string where = "graph.edges[" + std::to_string(index++) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("m"))
        throw input_error(where + ": expected {\"u\", \"v\", \"m\"}");
      if (!e["u"].is_string() || !e["v"].is_string())
        throw input_error(where + ": endpoints must be strings");
      if (!e["m"].is_number_integer())
        throw input_error(where + ".m: label must be an integer");
      edges.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(),
                       e["m"].get<Label>()});
    }
  }
  return PresentationGraph(std::move(vertices), edges, std::move(name));
}

json evidence_to_json(const PipRpEvidence& e) {
  json j;
  j["outcome"] = e.certified ? "certified" : "unknown";
  if (e.certified) j["rule"] = e.rule;
  if (e.superset) {
    j["superset"] = graph_to_json(*e.superset);
    j["superset_rule"] = e.superset_rule;
    json emb = json::object();
    for (const auto& [from, to] : e.embedding) emb[from] = to;
    j["embedding"] = std::move(emb);
  }
  return j;
}

PipRpEvidence evidence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("outcome"))
    throw input_error("hypothesis: expected {\"outcome\", ...}");
  PipRpEvidence e;
  const std::string outcome = j["outcome"].get<std::string>();
  if (outcome != "certified" && outcome != "unknown")
    throw input_error("hypothesis.outcome: expected \"certified\" or \"unknown\"");
  e.certified = outcome == "certified";
  if (j.contains("rule")) e.rule = j["rule"].get<std::string>();
  if (e.certified && e.rule.empty())
    throw input_error("hypothesis: certified evidence needs a rule");
  if (j.contains("superset")) {
    e.superset = graph_from_json(j["superset"]);
    if (j.contains("superset_rule"))
      e.superset_rule = j["superset_rule"].get<std::string>();
    if (j.contains("embedding")) {
      for (const auto& [from, to] : j["embedding"].items())
        e.embedding.emplace_back(from, to.get<std::string>());
    }
  }
  return e;
}

json splitting_to_json(const PresentationGraph& g, const VisualSplitting& s) {
  return json{{"x", set_to_names(g, s.x)},
              {"y", set_to_names(g, s.y)},
              {"z", set_to_names(g, s.z)}};
}

json witness_word_to_json(const WitnessWord& w) {
  auto kind = [](WitnessWord::CentreKind k) {
    switch (k) {
      case WitnessWord::CentreKind::Generator: return "generator";
      case WitnessWord::CentreKind::Delta: return "delta";
      case WitnessWord::CentreKind::DeltaSquared: return "delta-squared";
    }
    return "?";
  };
  json j;
  j["word"] = w.to_string();
  j["x"] = w.x;
  j["x_prime"] = w.x_prime;
  j["y"] = w.y;
  j["y_prime"] = w.y_prime;
  j["odd_path"] = w.path;
  j["conjugator"] = word_to_string(w.conjugator);
  j["z_x"] = word_to_string(w.z_x);
  j["z_x_kind"] = kind(w.z_x_kind);
  j["z_y"] = word_to_string(w.z_y);
  j["z_y_kind"] = kind(w.z_y_kind);
  return j;
}

json verdict_to_json(const PresentationGraph& g, const AcylindricityVerdict& v) {
  json j;
  j["criterion"] = v.criterion.holds ? "holds" : "fails";
  j["n_x"] = set_to_names(g, v.criterion.side_x_neighbourhood);
  j["n_y"] = set_to_names(g, v.criterion.side_y_neighbourhood);
  if (!v.criterion.holds) {
    j["criterion_witness"] = {g.name_of(v.criterion.witness->first),
                              g.name_of(v.criterion.witness->second)};
    json path = json::array();
    for (int p : v.criterion.path) path.push_back(g.name_of(p));
    j["odd_path"] = std::move(path);
  }
  j["hypothesis_x"] = evidence_to_json(v.hypothesis_x);
  j["hypothesis_y"] = evidence_to_json(v.hypothesis_y);
  j["verdict"] = verdict_to_string(v.verdict);
  if (v.verdict == Verdict::Acylindrical) {
    j["k"] = AcylindricityVerdict::kPathLength;
    j["c"] = AcylindricityVerdict::kStabiliserBound;
  }
  if (v.witness) j["witness_word"] = witness_word_to_json(*v.witness);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace artin::detail
