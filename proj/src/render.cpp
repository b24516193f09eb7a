#include "commont/render.hpp"

#include <sstream>

namespace commont {

std::string to_text(const Fluent& f) {
    switch (f.kind()) {
        case FluentKind::Proposition:
            return f.content();
        case FluentKind::Acceptance:
            return "accept(" + f.signatory() + "," + f.addressee() + "," +
                   f.object() + ")";
        case FluentKind::Commitment:
            return "C(" + f.debtor() + "," + f.creditor() + "," +
                   to_text(f.condition()) + ")";
        case FluentKind::ConditionalCommitment:
            return "CC(" + f.debtor() + "," + f.creditor() + "," +
                   to_text(f.condition()) + "," + to_text(f.conditioned_to()) + ")";
    }
    return "?";
}

std::string to_text(const StampedFluent& sf) {
    return to_text(sf.fluent) + "@t" + std::to_string(sf.stamped_at);
}

std::string to_text(const FluentStore& store) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const StampedFluent& sf : store.active()) {
        if (!first) out << ", ";
        first = false;
        out << to_text(sf);
    }
    out << '}';
    return out.str();
}

std::string to_text(const TraceEntry& entry) {
    return "(" + to_text(entry.fluent) + ", " + std::to_string(entry.rank) + ")";
}

std::string to_text(const ProtocolTrace& trace) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (const TraceEntry& entry : trace.entries()) {
        if (!first) out << ", ";
        first = false;
        out << to_text(entry);
    }
    out << ']';
    return out.str();
}

std::string to_text(const AbstractTraceMultiset& multiset) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const Fluent& f : multiset.fluents()) {
        if (!first) out << ", ";
        first = false;
        out << to_text(f);
    }
    out << '}';
    return out.str();
}

std::string to_text(const ActEvent& event) {
    return event.act_class + "(" + event.sender + "," + event.receiver + ")";
}

std::string to_text(const MatchingMap& map) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [from, to] : map.pairs) {
        if (!first) out << ", ";
        first = false;
        out << to_text(from) << " -> " << to_text(to);
    }
    out << '}';
    return out.str();
}

}  // namespace commont
