#include "artin/corpus.hpp"

namespace artin::corpus {

namespace {

std::string vertex_name(int i) {
  if (i < 0 || i >= 26)
    throw input_error("family graphs support at most 26 vertices");
  return std::string(1, static_cast<char>('a' + i));
}

std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(vertex_name(i));
  return names;
}

} // namespace

PresentationGraph example3_4() {
  return PresentationGraph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}},
                           "example3_4");
}

PresentationGraph figure2_as_printed() {
  return PresentationGraph(
      {"a", "b", "c", "d", "e", "f", "g", "h"},
      {{"a", "b", 2},
       {"a", "e", 2},
       {"a", "f", 4},
       {"b", "c", 4},
       {"b", "f", 2},
       {"c", "d", 3},
       {"c", "g", 4},
       {"d", "g", 3},
       {"d", "h", 3},
       {"e", "f", 2},
       {"e", "h", 4},
       {"f", "g", 4},
       {"g", "h", 3}},
      "figure2_as_printed");
}

PresentationGraph figure3_union() {
  return PresentationGraph(
      {"a", "b", "c", "d", "e", "f", "g", "h"},
      {{"a", "b", 2},
       {"a", "e", 2},
       {"a", "f", 4},
       {"b", "c", 4},
       {"b", "f", 2},
       {"c", "d", 3},
       {"c", "g", 4},
       {"d", "g", 3},
       {"d", "h", 3},
       {"e", "f", 2},
       {"f", "g", 4},
       {"g", "h", 3}},
      "figure3_union");
}

PresentationGraph complete(int n, Label label) {
  std::vector<PresentationGraph::NamedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({vertex_name(i), vertex_name(j), label});
  return PresentationGraph(vertex_names(n), edges,
                           "K" + std::to_string(n));
}

PresentationGraph discrete(int n) {
  return PresentationGraph(vertex_names(n), {}, "O" + std::to_string(n));
}

PresentationGraph path(int n, const std::vector<Label>& labels) {
  if (n < 1) throw input_error("path: need at least one vertex");
  if (static_cast<int>(labels.size()) != n - 1)
    throw input_error("path: expected " + std::to_string(n - 1) + " labels");
  std::vector<PresentationGraph::NamedEdge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({vertex_name(i), vertex_name(i + 1), labels[i]});
  return PresentationGraph(vertex_names(n), edges, "P" + std::to_string(n));
}

PresentationGraph path(int n, Label label) {
  return path(n, std::vector<Label>(n > 0 ? n - 1 : 0, label));
}

PresentationGraph cycle(int n, const std::vector<Label>& labels) {
  if (n < 3) throw input_error("cycle: need at least three vertices");
  if (static_cast<int>(labels.size()) != n)
    throw input_error("cycle: expected " + std::to_string(n) + " labels");
  std::vector<PresentationGraph::NamedEdge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({vertex_name(i), vertex_name((i + 1) % n), labels[i]});
  return PresentationGraph(vertex_names(n), edges, "C" + std::to_string(n));
}

PresentationGraph cycle(int n, Label label) {
  return cycle(n, std::vector<Label>(n, label));
}

} // namespace artin::corpus
