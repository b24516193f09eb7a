#pragma once

#include <string>

#include "commont/fluent.hpp"
#include "commont/relations.hpp"
#include "commont/semantics.hpp"
#include "commont/traces.hpp"

namespace commont {

// Compact textual forms: propositions by bare content name, acceptances as
// accept(S,R,C), commitments as C(x,y,p) and CC(x,y,p,q), stamps as @tN.

std::string to_text(const Fluent& f);
std::string to_text(const StampedFluent& sf);

// "{f1@t1, f2@t3}"; the empty store is "{}".
std::string to_text(const FluentStore& store);

// "(accept(B,A,TimeReq), 1)"
std::string to_text(const TraceEntry& entry);

// "[(accept(B,A,TimeReq), 1), (TimeInfo, 2)]"
std::string to_text(const ProtocolTrace& trace);

// "{accept(B,A,TimeReq), TimeInfo}"
std::string to_text(const AbstractTraceMultiset& multiset);

// "TimeRequest(A,B)"
std::string to_text(const ActEvent& event);

// "{A-TempInfo -> TempInfo, ...}"
std::string to_text(const MatchingMap& map);

}  // namespace commont
