#ifndef ARTIN_IO_HPP
#define ARTIN_IO_HPP

#include <map>
#include <string>
#include <utility>

#include "artin/presentation_graph.hpp"

namespace artin {

enum class GraphFormat { Text, Json };

// Parsed graph plus source metadata for diagnostics.
struct GraphDocument {
  PresentationGraph graph;
  std::string source_path; // "<string>" when parsed from memory
  GraphFormat format = GraphFormat::Text;
  std::map<std::string, int> vertex_line;
  std::map<std::pair<std::string, std::string>, int> edge_line;
};

// Text format: "v <name>" declares a vertex, "<u> <v> <m>" declares an
// edge (auto-declaring endpoints), '#' starts a comment. Errors carry
// 1-based line numbers.
GraphDocument parse_text_graph(const std::string& text,
                               const std::string& source_path = "<string>");

// JSON format: { "name"?: str, "vertices": [str], "edges": [{u, v, m}] }.
GraphDocument parse_json_graph(const std::string& text,
                               const std::string& source_path = "<string>");

// Dispatches on extension: ".json" means JSON, anything else text.
GraphDocument load_graph_file(const std::string& path);

std::string render_text_graph(const PresentationGraph& g);
std::string render_json_graph(const PresentationGraph& g);

// Undirected DOT with label attributes; optionally marks odd-labelled
// edges (bold red).
std::string render_dot(const PresentationGraph& g, bool highlight_odd = false);

} // namespace artin

#endif // ARTIN_IO_HPP
