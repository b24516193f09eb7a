#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commont/traces.hpp"

namespace commont {

// The eight protocol-level relations, strongest first. `strongest` in a
// verdict is the first one that holds in this order.
enum class Relation : int {
    Equivalent = 0,
    Restriction,
    SpecializedEquivalent,
    SpecializedRestriction,
    ShallowEquivalent,
    ShallowRestriction,
    ShallowSpecializedEquivalent,
    ShallowSpecializedRestriction,
};

inline constexpr std::array<Relation, 8> kAllRelations = {
    Relation::Equivalent,
    Relation::Restriction,
    Relation::SpecializedEquivalent,
    Relation::SpecializedRestriction,
    Relation::ShallowEquivalent,
    Relation::ShallowRestriction,
    Relation::ShallowSpecializedEquivalent,
    Relation::ShallowSpecializedRestriction,
};

const char* relation_name(Relation r);

// An injective assignment showing how one multiset specializes another;
// pairs are (specialized fluent, the more general fluent it maps to).
struct MatchingMap {
    std::vector<std::pair<Fluent, Fluent>> pairs;
};

// Deep trace specialization t ≪ s: equal length and positionwise fluent
// subsumption, rank-aligned.
bool trace_specializes(const Ontology& ont, const ProtocolTrace& t,
                       const ProtocolTrace& s);

// Shallow specialization t ≪_s s: an injective map φ saturating t with
// f ⊑ φ(f) for every fluent, found by maximum bipartite matching. Absent when
// no such map exists.
std::optional<MatchingMap> shallow_trace_specializes(
    const Ontology& ont, const AbstractTraceMultiset& t,
    const AbstractTraceMultiset& s);

struct RelationResult {
    bool holds = false;
    // A witness: the counterexample making the relation fail, or for the
    // specialized-equivalence relations the orientation and matching found.
    std::string note;
    std::optional<MatchingMap> matching;
};

struct RelationVerdict {
    std::array<RelationResult, 8> results;
    std::optional<Relation> strongest;

    const RelationResult& operator[](Relation r) const {
        return results[static_cast<std::size_t>(r)];
    }
    RelationResult& operator[](Relation r) {
        return results[static_cast<std::size_t>(r)];
    }
    bool any_holds() const;
};

// Decides all eight relations between two protocols over the same role pair.
// The directional relations read A as the first argument; the two
// specialized-equivalence relations hold in either orientation, with the
// orientation recorded in the note. Throws ProtocolError when the protocols
// declare different role sets.
RelationVerdict compare(const Protocol& a, const Protocol& b, const Ontology& ont,
                        const SemanticsRegistry& registry);

}  // namespace commont
