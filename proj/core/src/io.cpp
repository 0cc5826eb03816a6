#include "artin/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace artin {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string token;
  while (is >> token) tokens.push_back(token);
  return tokens;
}

input_error at_line(const std::string& path, int line, const std::string& what) {
  return input_error(path + ":" + std::to_string(line) + ": " + what);
}

} // namespace

GraphDocument parse_text_graph(const std::string& text,
                               const std::string& source_path) {
  GraphDocument doc;
  doc.source_path = source_path;
  doc.format = GraphFormat::Text;

  std::vector<std::string> vertices;
  std::vector<PresentationGraph::NamedEdge> edges;
  auto declare = [&](const std::string& name, int line) {
    if (!doc.vertex_line.count(name)) {
      doc.vertex_line.emplace(name, line);
      vertices.push_back(name);
    }
  };

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 2) {
      if (tokens[0] != "v")
        throw at_line(source_path, lineno,
                      "expected \"v <name>\" or \"<u> <v> <m>\", got \"" +
                          tokens[0] + " " + tokens[1] + "\"");
      declare(tokens[1], lineno);
      continue;
    }
    if (tokens.size() == 3) {
      const std::string& u = tokens[0];
      const std::string& v = tokens[1];
      std::int64_t m = 0;
      try {
        std::size_t consumed = 0;
        m = std::stoll(tokens[2], &consumed);
        if (consumed != tokens[2].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw at_line(source_path, lineno,
                      "edge label \"" + tokens[2] + "\" is not an integer");
      }
      if (u == v)
        throw at_line(source_path, lineno, "self-loop on vertex \"" + u + "\"");
      if (m < 2)
        throw at_line(source_path, lineno, "label must be >= 2 (got " +
                                               std::to_string(m) + ")");
      if (m > PresentationGraph::kMaxLabel)
        throw at_line(source_path, lineno,
                      "label " + std::to_string(m) + " exceeds the maximum " +
                          std::to_string(PresentationGraph::kMaxLabel));
      const auto key = std::minmax(u, v);
      if (const auto it = doc.edge_line.find(key); it != doc.edge_line.end())
        throw at_line(source_path, lineno,
                      "duplicate edge {" + u + ", " + v + "} (first declared on line " +
                          std::to_string(it->second) + ")");
      doc.edge_line.emplace(key, lineno);
      declare(u, lineno);
      declare(v, lineno);
      edges.push_back({u, v, static_cast<Label>(m)});
      continue;
    }
    throw at_line(source_path, lineno,
                  "expected \"v <name>\" or \"<u> <v> <m>\"");
  }

  try {
    doc.graph = PresentationGraph(std::move(vertices), edges);
  } catch (const input_error& e) {
    throw input_error(source_path + ": " + e.what());
  }
  return doc;
}

GraphDocument parse_json_graph(const std::string& text,
                               const std::string& source_path) {
  GraphDocument doc;
  doc.source_path = source_path;
  doc.format = GraphFormat::Json;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(source_path + ": " + e.what());
  }
  try {
    doc.graph = detail::graph_from_json(j);
  } catch (const input_error& e) {
    throw input_error(source_path + ": " + e.what());
  }
  return doc;
}

GraphDocument load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return json ? parse_json_graph(buffer.str(), path)
              : parse_text_graph(buffer.str(), path);
}

std::string render_text_graph(const PresentationGraph& g) {
  std::ostringstream os;
  for (const auto& name : g.vertex_names()) os << "v " << name << "\n";
  for (const auto& e : g.edges())
    os << g.name_of(e.u) << " " << g.name_of(e.v) << " " << e.m << "\n";
  return os.str();
}

std::string render_json_graph(const PresentationGraph& g) {
  return detail::dump(detail::graph_to_json(g));
}

std::string render_dot(const PresentationGraph& g, bool highlight_odd) {
  std::ostringstream os;
  os << "graph";
  if (!g.graph_name().empty()) os << " \"" << g.graph_name() << "\"";
  os << " {\n";
  for (const auto& name : g.vertex_names()) os << "  \"" << name << "\";\n";
  for (const auto& e : g.edges()) {
    os << "  \"" << g.name_of(e.u) << "\" -- \"" << g.name_of(e.v)
       << "\" [label=" << e.m;
    if (highlight_odd && e.m % 2 == 1) os << ", color=red, style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace artin
