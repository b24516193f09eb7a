#pragma once

#include "json.hpp"

#include "commont/protocol.hpp"
#include "commont/relations.hpp"
#include "commont/traces.hpp"

namespace commont {

// JSON images of the analysis results, for the CLI's --json mode. Shapes are
// stable: golden tests pin them.

nlohmann::json json_of(const Fluent& f);
nlohmann::json json_of(const StampedFluent& sf);
nlohmann::json json_of(const FluentStore& store);
nlohmann::json json_of(const TraceEntry& entry);
nlohmann::json json_of(const ProtocolTrace& trace);
nlohmann::json json_of(const AbstractTraceMultiset& multiset);
nlohmann::json json_of(const ActEvent& event);
nlohmann::json json_of(const MatchingMap& map);
nlohmann::json json_of(const RelationVerdict& verdict);
nlohmann::json json_of(const ValidationReport& report);

}  // namespace commont
