#include "commont/json_io.hpp"

#include "commont/render.hpp"

namespace commont {

using nlohmann::json;

json json_of(const Fluent& f) {
    switch (f.kind()) {
        case FluentKind::Proposition:
            return {{"kind", "proposition"}, {"content", f.content()}};
        case FluentKind::Acceptance:
            return {{"kind", "acceptance"},
                    {"signatory", f.signatory()},
                    {"addressee", f.addressee()},
                    {"content", f.object()}};
        case FluentKind::Commitment:
            return {{"kind", "commitment"},
                    {"debtor", f.debtor()},
                    {"creditor", f.creditor()},
                    {"condition", json_of(f.condition())}};
        case FluentKind::ConditionalCommitment:
            return {{"kind", "conditional-commitment"},
                    {"debtor", f.debtor()},
                    {"creditor", f.creditor()},
                    {"condition", json_of(f.condition())},
                    {"conditioned-to", json_of(f.conditioned_to())}};
    }
    return nullptr;
}

json json_of(const StampedFluent& sf) {
    json j = json_of(sf.fluent);
    j["tick"] = sf.stamped_at;
    return j;
}

json json_of(const FluentStore& store) {
    json j = json::array();
    for (const StampedFluent& sf : store.active()) j.push_back(json_of(sf));
    return j;
}

json json_of(const TraceEntry& entry) {
    json j = json_of(entry.fluent);
    j["rank"] = entry.rank;
    return j;
}

json json_of(const ProtocolTrace& trace) {
    json j = json::array();
    for (const TraceEntry& entry : trace.entries()) j.push_back(json_of(entry));
    return j;
}

json json_of(const AbstractTraceMultiset& multiset) {
    json j = json::array();
    for (const Fluent& f : multiset.fluents()) j.push_back(json_of(f));
    return j;
}

json json_of(const ActEvent& event) {
    return {{"act", event.act_class},
            {"sender", event.sender},
            {"receiver", event.receiver}};
}

json json_of(const MatchingMap& map) {
    json j = json::array();
    for (const auto& [from, to] : map.pairs)
        j.push_back({{"from", json_of(from)}, {"to", json_of(to)}});
    return j;
}

json json_of(const RelationVerdict& verdict) {
    json relations = json::object();
    for (Relation rel : kAllRelations) {
        const RelationResult& r = verdict[rel];
        json entry = {{"holds", r.holds}};
        if (!r.note.empty()) entry["note"] = r.note;
        if (r.matching) entry["matching"] = json_of(*r.matching);
        relations[relation_name(rel)] = std::move(entry);
    }
    json j = {{"relations", std::move(relations)}};
    j["strongest"] =
        verdict.strongest ? json(relation_name(*verdict.strongest)) : json();
    return j;
}

json json_of(const ValidationReport& report) {
    json structural = json::array();
    for (const ValidationIssue& issue : report.structural)
        structural.push_back({{"code", issue.code}, {"message", issue.message}});
    json runs = json::array();
    for (const RunCheck& check : report.runs) {
        json events = json::array();
        for (const ActEvent& event : check.run.events)
            events.push_back(json_of(event));
        json lingering = json::array();
        for (const StampedFluent& sf : check.lingering)
            lingering.push_back(json_of(sf));
        runs.push_back({{"events", std::move(events)},
                        {"final-state", check.final_state},
                        {"clean", check.clean},
                        {"lingering", std::move(lingering)}});
    }
    return {{"structural", std::move(structural)},
            {"cyclic", report.cyclic},
            {"runs-checked", report.runs_checked},
            {"runs", std::move(runs)},
            {"clean", report.clean()}};
}

}  // namespace commont
