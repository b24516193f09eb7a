#include "commont/relations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "commont/render.hpp"

namespace commont {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Equivalent: return "equivalent";
        case Relation::Restriction: return "restriction";
        case Relation::SpecializedEquivalent: return "specialized-equivalent";
        case Relation::SpecializedRestriction: return "specialized-restriction";
        case Relation::ShallowEquivalent: return "shallow-equivalent";
        case Relation::ShallowRestriction: return "shallow-restriction";
        case Relation::ShallowSpecializedEquivalent:
            return "shallow-specialized-equivalent";
        case Relation::ShallowSpecializedRestriction:
            return "shallow-specialized-restriction";
    }
    return "?";
}

bool trace_specializes(const Ontology& ont, const ProtocolTrace& t,
                       const ProtocolTrace& s) {
    if (t.size() != s.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!matches(ont, t.entries()[i].fluent, s.entries()[i].fluent))
            return false;
    return true;
}

std::optional<MatchingMap> shallow_trace_specializes(
    const Ontology& ont, const AbstractTraceMultiset& t,
    const AbstractTraceMultiset& s) {
    const std::vector<Fluent>& left = t.fluents();
    const std::vector<Fluent>& right = s.fluents();
    if (left.size() > right.size()) return std::nullopt;

    std::vector<std::vector<std::size_t>> compatible(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (matches(ont, left[i], right[j])) compatible[i].push_back(j);

    // Kuhn's augmenting-path matching; every left element must be matched.
    constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(right.size(), kUnmatched);
    std::vector<bool> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (std::size_t j : compatible[i]) {
            if (visited[j]) continue;
            visited[j] = true;
            if (owner[j] == kUnmatched || augment(owner[j])) {
                owner[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < left.size(); ++i) {
        visited.assign(right.size(), false);
        if (!augment(i)) return std::nullopt;
    }

    std::vector<std::size_t> target(left.size(), kUnmatched);
    for (std::size_t j = 0; j < right.size(); ++j)
        if (owner[j] != kUnmatched) target[owner[j]] = j;
    MatchingMap map;
    map.pairs.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        map.pairs.emplace_back(left[i], right[target[i]]);
    return map;
}

bool RelationVerdict::any_holds() const {
    return std::any_of(results.begin(), results.end(),
                       [](const RelationResult& r) { return r.holds; });
}

namespace {

// One direction of specialized equivalence: every X-trace specializes some
// Y-trace, and every Y-trace is specialized by some X-trace. On failure the
// offending trace is reported through `why`.
bool deep_specializes_dir(const Ontology& ont, const TraceSet& x,
                          const TraceSet& y, std::string& why) {
    for (const ProtocolTrace& t : x) {
        bool found = std::any_of(y.begin(), y.end(), [&](const ProtocolTrace& s) {
            return trace_specializes(ont, t, s);
        });
        if (!found) {
            why = "trace " + to_text(t) + " specializes no counterpart";
            return false;
        }
    }
    for (const ProtocolTrace& s : y) {
        bool found = std::any_of(x.begin(), x.end(), [&](const ProtocolTrace& t) {
            return trace_specializes(ont, t, s);
        });
        if (!found) {
            why = "trace " + to_text(s) + " is specialized by no counterpart";
            return false;
        }
    }
    return true;
}

bool shallow_specializes_dir(const Ontology& ont, const AbstractTraceSet& x,
                             const AbstractTraceSet& y, std::string& why,
                             std::optional<MatchingMap>& witness) {
    for (const AbstractTraceMultiset& t : x) {
        std::optional<MatchingMap> found;
        for (const AbstractTraceMultiset& s : y)
            if ((found = shallow_trace_specializes(ont, t, s))) break;
        if (!found) {
            why = "multiset " + to_text(t) + " specializes no counterpart";
            return false;
        }
        if (!witness) witness = found;
    }
    for (const AbstractTraceMultiset& s : y) {
        bool found = std::any_of(
            x.begin(), x.end(), [&](const AbstractTraceMultiset& t) {
                return shallow_trace_specializes(ont, t, s).has_value();
            });
        if (!found) {
            why = "multiset " + to_text(s) + " is specialized by no counterpart";
            return false;
        }
    }
    return true;
}

template <class Set>
std::optional<typename Set::value_type> first_difference(const Set& a,
                                                         const Set& b) {
    for (const auto& x : a)
        if (!b.count(x)) return x;
    return std::nullopt;
}

}  // namespace

RelationVerdict compare(const Protocol& a, const Protocol& b, const Ontology& ont,
                        const SemanticsRegistry& registry) {
    std::set<std::string> roles_a(a.roles().begin(), a.roles().end());
    std::set<std::string> roles_b(b.roles().begin(), b.roles().end());
    if (roles_a != roles_b)
        throw ProtocolError("protocols '" + a.name() + "' and '" + b.name() +
                            "' declare different role sets and cannot be compared");

    const TraceSet ta = trace_set(a, ont, registry);
    const TraceSet tb = trace_set(b, ont, registry);
    const AbstractTraceSet sa = abstract_trace_set(ta);
    const AbstractTraceSet sb = abstract_trace_set(tb);

    RelationVerdict verdict;

    {  // equivalent: T(A) = T(B)
        RelationResult& r = verdict[Relation::Equivalent];
        r.holds = (ta == tb);
        if (!r.holds) {
            if (auto t = first_difference(ta, tb))
                r.note = "trace " + to_text(*t) + " of '" + a.name() +
                         "' is not among '" + b.name() + "' traces";
            else if (auto s = first_difference(tb, ta))
                r.note = "trace " + to_text(*s) + " of '" + b.name() +
                         "' is not among '" + a.name() + "' traces";
        }
    }
    {  // restriction: T(A) ⊊ T(B)
        RelationResult& r = verdict[Relation::Restriction];
        auto missing = first_difference(ta, tb);
        r.holds = !missing && ta != tb;
        if (missing)
            r.note = "trace " + to_text(*missing) + " of '" + a.name() +
                     "' is not among '" + b.name() + "' traces";
        else if (ta == tb)
            r.note = "trace sets are equal, not strictly contained";
    }
    {  // specialized-equivalent, in either orientation
        RelationResult& r = verdict[Relation::SpecializedEquivalent];
        std::string why_ab, why_ba;
        if (deep_specializes_dir(ont, ta, tb, why_ab)) {
            r.holds = true;
            r.note = "'" + a.name() + "' specializes '" + b.name() + "'";
        } else if (deep_specializes_dir(ont, tb, ta, why_ba)) {
            r.holds = true;
            r.note = "'" + b.name() + "' specializes '" + a.name() + "'";
        } else {
            r.note = why_ab;
        }
    }
    {  // specialized-restriction: every A-trace specializes some B-trace
        RelationResult& r = verdict[Relation::SpecializedRestriction];
        r.holds = true;
        for (const ProtocolTrace& t : ta) {
            bool found = std::any_of(tb.begin(), tb.end(),
                                     [&](const ProtocolTrace& s) {
                                         return trace_specializes(ont, t, s);
                                     });
            if (!found) {
                r.holds = false;
                r.note = "trace " + to_text(t) + " of '" + a.name() +
                         "' specializes no trace of '" + b.name() + "'";
                break;
            }
        }
    }
    {  // shallow-equivalent: S(A) = S(B)
        RelationResult& r = verdict[Relation::ShallowEquivalent];
        r.holds = (sa == sb);
        if (!r.holds) {
            if (auto t = first_difference(sa, sb))
                r.note = "multiset " + to_text(*t) + " of '" + a.name() +
                         "' is not among '" + b.name() + "' multisets";
            else if (auto s = first_difference(sb, sa))
                r.note = "multiset " + to_text(*s) + " of '" + b.name() +
                         "' is not among '" + a.name() + "' multisets";
        }
    }
    {  // shallow-restriction: S(A) ⊊ S(B)
        RelationResult& r = verdict[Relation::ShallowRestriction];
        auto missing = first_difference(sa, sb);
        r.holds = !missing && sa != sb;
        if (missing)
            r.note = "multiset " + to_text(*missing) + " of '" + a.name() +
                     "' is not among '" + b.name() + "' multisets";
        else if (sa == sb)
            r.note = "abstract trace sets are equal, not strictly contained";
    }
    {  // shallow-specialized-equivalent, in either orientation
        RelationResult& r = verdict[Relation::ShallowSpecializedEquivalent];
        std::string why_ab, why_ba;
        std::optional<MatchingMap> map_ab, map_ba;
        if (shallow_specializes_dir(ont, sa, sb, why_ab, map_ab)) {
            r.holds = true;
            r.note = "'" + a.name() + "' specializes '" + b.name() + "'";
            r.matching = map_ab;
        } else if (shallow_specializes_dir(ont, sb, sa, why_ba, map_ba)) {
            r.holds = true;
            r.note = "'" + b.name() + "' specializes '" + a.name() + "'";
            r.matching = map_ba;
        } else {
            r.note = why_ab;
        }
    }
    {  // shallow-specialized-restriction: S(A) covered into S(B)
        RelationResult& r = verdict[Relation::ShallowSpecializedRestriction];
        r.holds = true;
        for (const AbstractTraceMultiset& t : sa) {
            std::optional<MatchingMap> found;
            for (const AbstractTraceMultiset& s : sb)
                if ((found = shallow_trace_specializes(ont, t, s))) break;
            if (!found) {
                r.holds = false;
                r.note = "multiset " + to_text(t) + " of '" + a.name() +
                         "' specializes no multiset of '" + b.name() + "'";
                break;
            }
            if (!r.matching) r.matching = found;
        }
        if (!r.holds) r.matching.reset();
    }

    for (Relation rel : kAllRelations)
        if (verdict[rel].holds) {
            verdict.strongest = rel;
            break;
        }
    return verdict;
}

}  // namespace commont
