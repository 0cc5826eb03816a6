#ifndef ARTIN_CORPUS_HPP
#define ARTIN_CORPUS_HPP

#include <vector>

#include "artin/presentation_graph.hpp"

namespace artin::corpus {

// Path a-b-c with labels 2 and 3: the smallest group with a visual
// splitting but no acylindrical one.
PresentationGraph example3_4();

// Eight vertices, 13 edges, including the extra edge e-h:4. With that
// edge, {b, c, f, g} no longer separates; kept so the separation failure
// is demonstrable.
PresentationGraph figure2_as_printed();

// Union of the two overlapping six-vertex sides (12 edges); the split at
// Z = {b, c, f, g} is the flagship acylindrical example.
PresentationGraph figure3_union();

// Standard families. Vertices are named a, b, c, ... (n <= 26).
PresentationGraph complete(int n, Label label = 2);               // K_n
PresentationGraph discrete(int n);                                // O_n
PresentationGraph path(int n, const std::vector<Label>& labels);  // P_n
PresentationGraph path(int n, Label label);
PresentationGraph cycle(int n, const std::vector<Label>& labels); // C_n
PresentationGraph cycle(int n, Label label);

} // namespace artin::corpus

#endif // ARTIN_CORPUS_HPP
