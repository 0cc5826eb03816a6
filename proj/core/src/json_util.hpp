#ifndef ARTIN_SRC_JSON_UTIL_HPP
#define ARTIN_SRC_JSON_UTIL_HPP

// Internal JSON serialization helpers shared by the io, tits and cli
// translation units. Not installed.

#include <json.hpp>

#include "artin/classes.hpp"
#include "artin/presentation_graph.hpp"
#include "artin/splittings.hpp"

namespace artin::detail {

nlohmann::json graph_to_json(const PresentationGraph& g);
PresentationGraph graph_from_json(const nlohmann::json& j);

nlohmann::json evidence_to_json(const PipRpEvidence& e);
PipRpEvidence evidence_from_json(const nlohmann::json& j);

nlohmann::json splitting_to_json(const PresentationGraph& g,
                                 const VisualSplitting& s);

nlohmann::json witness_word_to_json(const WitnessWord& w);

// Full verdict object for the check/splittings commands.
nlohmann::json verdict_to_json(const PresentationGraph& g,
                               const AcylindricityVerdict& v);

std::string dump(const nlohmann::json& j);

} // namespace artin::detail

#endif // ARTIN_SRC_JSON_UTIL_HPP
