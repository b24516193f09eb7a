// Acceptance gate: seven checks covering the worked examples and the
// property suites, one PASS/FAIL line each. Exits nonzero when any fails.
// Time limits are pinned here, next to the checks they bound.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commont/relations.hpp"
#include "commont/render.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace commont;
using namespace testsupport;

namespace {

const SemanticsRegistry& reg() { return SemanticsRegistry::standard(); }

int g_failed = 0;

class Criterion {
public:
    Criterion(int number, std::string title, double limit_seconds = 0.0)
        : number_(number), title_(std::move(title)),
          limit_seconds_(limit_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (ok) return;
        failed_ = true;
        details_.push_back(detail);
    }

    void finish() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_)
                .count();
        if (limit_seconds_ > 0.0 && elapsed > limit_seconds_) {
            failed_ = true;
            std::ostringstream over;
            over << "took " << elapsed << " s, limit " << limit_seconds_ << " s";
            details_.push_back(over.str());
        }
        std::cout << (failed_ ? "FAIL" : "PASS") << " criterion " << number_
                  << ": " << title_ << " [" << static_cast<int>(elapsed * 1000.0)
                  << " ms]\n";
        for (const std::string& d : details_)
            std::cout << "       " << d << '\n';
        if (failed_) ++g_failed;
    }

private:
    int number_;
    std::string title_;
    double limit_seconds_;
    std::chrono::steady_clock::time_point start_;
    bool failed_ = false;
    std::vector<std::string> details_;
};

bool store_equals(const FluentStore& store,
                  const std::vector<StampedFluent>& expected) {
    return store.active() == expected;
}

// 1. The unique AskTime run reproduces the four fluent sets exactly,
//    timestamps included.
void criterion_1() {
    Criterion c(1, "scripted exchange reproduces the four fluent sets", 1.0);
    Protocol p = load_fixture_protocol("data/asktime.sts");
    std::vector<Run> runs = enumerate_runs(p);
    c.expect(runs.size() == 1, "AskTime must have exactly one run");
    if (runs.size() == 1) {
        std::vector<FluentStore> f = replay(runs[0].events, catalog(), reg());
        c.expect(f.size() == 4, "expected four stores");
        const Fluent accept = Fluent::acceptance("B", "A", "TimeReq");
        const Fluent request = Fluent::proposition("TimeReq");
        const Fluent info = Fluent::proposition("TimeInfo");
        c.expect(store_equals(f[0], {}), "F0 must be empty, got " + to_text(f[0]));
        c.expect(store_equals(
                     f[1], {{Fluent::conditional_commitment("B", "A", accept,
                                                            request),
                             1}}),
                 "F1 mismatch: " + to_text(f[1]));
        c.expect(store_equals(f[2], {{accept, 2},
                                     {Fluent::commitment("B", "A", request), 3}}),
                 "F2 mismatch: " + to_text(f[2]));
        c.expect(store_equals(f[3], {{accept, 2}, {info, 4}}),
                 "F3 mismatch: " + to_text(f[3]));
    }
    c.finish();
}

// 2. The trace listings of the three protocols match the known values after
//    rank normalization.
void criterion_2() {
    Criterion c(2, "trace sets match the three known listings", 1.0);
    auto expect_traces = [&](const char* path,
                             const std::vector<std::vector<TraceEntry>>& want) {
        TraceSet got = trace_set(load_fixture_protocol(path), catalog(), reg());
        TraceSet expected;
        for (const std::vector<TraceEntry>& entries : want) {
            FluentStore store;
            for (const TraceEntry& e : entries) store.initiate(e.fluent, e.rank);
            expected.insert(ProtocolTrace::from_final_store(store));
        }
        std::ostringstream listing;
        for (const ProtocolTrace& t : got) listing << to_text(t) << ' ';
        c.expect(got == expected,
                 std::string(path) + " trace set mismatch: " + listing.str());
    };
    expect_traces("data/asktime.sts",
                  {{{Fluent::acceptance("B", "A", "TimeReq"), 1},
                    {Fluent::proposition("TimeInfo"), 2}}});
    expect_traces("data/p1.sts",
                  {{{Fluent::acceptance("B", "A", "TempReq"), 1},
                    {Fluent::proposition("TempInfo"), 2},
                    {Fluent::acceptance("B", "A", "PulseReq"), 3},
                    {Fluent::proposition("PulseInfo"), 4}}});
    expect_traces("data/p2.sts",
                  {{{Fluent::acceptance("B", "A", "A-PulseReq"), 1},
                    {Fluent::proposition("A-PulseInfo"), 2},
                    {Fluent::acceptance("B", "A", "A-TempReq"), 3},
                    {Fluent::proposition("A-TempInfo"), 4}}});
    c.finish();
}

// 3. Comparing the two query protocols yields exactly the shallow
//    specialized equivalence, with its four-pair witness.
void criterion_3() {
    Criterion c(3, "protocol comparison finds only the shallow specialization");
    Protocol p1 = load_fixture_protocol("data/p1.sts");
    Protocol p2 = load_fixture_protocol("data/p2.sts");
    RelationVerdict v = compare(p1, p2, catalog(), reg());
    c.expect(!v[Relation::Equivalent].holds, "equivalent must not hold");
    c.expect(!v[Relation::Restriction].holds, "restriction must not hold");
    c.expect(!v[Relation::SpecializedEquivalent].holds,
             "specialized-equivalent must not hold");
    c.expect(v[Relation::ShallowSpecializedEquivalent].holds,
             "shallow-specialized-equivalent must hold");
    const RelationResult& sse = v[Relation::ShallowSpecializedEquivalent];
    c.expect(sse.matching.has_value() && sse.matching->pairs.size() == 4,
             "witness matching must map all four effects");
    c.expect(v.strongest && *v.strongest == Relation::ShallowSpecializedEquivalent,
             "strongest relation must be shallow-specialized-equivalent");
    c.finish();
}

// 4. Commitment dynamics reach their fixpoint: across 1,000 randomized runs,
//    no final store keeps a triggered conditional commitment, and protocols
//    whose runs all end commitment-free validate clean.
void criterion_4() {
    Criterion c(4, "rule fixpoint holds on 1,000 randomized runs", 30.0);
    std::mt19937 rng(20260818);
    std::size_t runs_done = 0;
    while (runs_done < 1000) {
        RandomCatalog cat = random_catalog(rng, 8, 12);  // 20 classes
        Ontology ont = load_ontology(cat.source, "<random>");
        dsl::ProtocolFile file = random_protocol_decl(rng, cat.acts, 8, "Rnd");
        Protocol p = load_protocol(dsl::serialize(file), ont, "<random>");
        std::vector<Run> runs = enumerate_runs(p);
        bool all_clean = true;
        for (const Run& run : runs) {
            ++runs_done;
            FluentStore final_store = replay(run.events, ont, reg()).back();
            bool has_commitment = false;
            for (const StampedFluent& sf : final_store.active()) {
                if (sf.fluent.kind() == FluentKind::Commitment ||
                    sf.fluent.kind() == FluentKind::ConditionalCommitment)
                    has_commitment = true;
                if (sf.fluent.kind() != FluentKind::ConditionalCommitment)
                    continue;
                for (const StampedFluent& other : final_store.active())
                    c.expect(!matches(ont, other.fluent, sf.fluent.condition()),
                             "triggered conditional commitment survived: " +
                                 to_text(sf) + " with " + to_text(other));
            }
            if (has_commitment) all_clean = false;
        }
        ValidationReport report = validate(p, ont, reg());
        c.expect(report.runs_checked && report.runs.size() == runs.size(),
                 "validate must check every enumerated run");
        c.expect(report.clean() == all_clean,
                 "validate verdict must agree with the replayed stores");
    }
    c.finish();
}

// 5. The matching decision agrees with exhaustive enumeration on 10,000
//    random multiset pairs of size up to 6 over 10-class hierarchies.
void criterion_5() {
    Criterion c(5, "matching agrees with the exhaustive oracle on 10,000 pairs",
                60.0);
    std::mt19937 rng(20260818);
    RandomHierarchy h;
    Ontology ont;
    for (int pair = 0; pair < 10000; ++pair) {
        if (pair % 50 == 0) {  // fresh 10-class hierarchy now and then
            h = random_content_hierarchy(rng, 10);
            ont = load_ontology(h.source, "<random>");
        }
        auto random_fluent = [&]() {
            const std::string& content = h.names[pick(rng, h.names.size())];
            if (chance(rng, 0.5)) return Fluent::proposition(content);
            bool ab = chance(rng, 0.5);
            return Fluent::acceptance(ab ? "A" : "B", ab ? "B" : "A", content);
        };
        auto random_multiset = [&]() {
            std::vector<Fluent> fluents;
            std::size_t n = pick(rng, 7);
            for (std::size_t i = 0; i < n; ++i) fluents.push_back(random_fluent());
            return AbstractTraceMultiset(std::move(fluents));
        };
        AbstractTraceMultiset left = random_multiset();
        AbstractTraceMultiset right = random_multiset();
        bool fast = shallow_trace_specializes(ont, left, right).has_value();
        bool slow = injective_matching_oracle(ont, left.fluents(), right.fluents());
        if (fast != slow) {
            c.expect(false, "disagreement on " + to_text(left) + " vs " +
                                to_text(right));
            break;
        }
    }
    c.finish();
}

// 6. Relation algebra: reflexivity, symmetry, and transitivity of
//    equivalence; irreflexivity of restriction; the implication laws.
void criterion_6() {
    Criterion c(6, "relation algebra holds on 1,000 generated pairs");
    std::mt19937 rng(20260818);
    std::size_t pairs = 0;
    auto checked_compare = [&](const Protocol& x, const Protocol& y,
                               const Ontology& ont) {
        ++pairs;
        RelationVerdict v = compare(x, y, ont, reg());
        c.expect(!v[Relation::Equivalent].holds ||
                     v[Relation::SpecializedEquivalent].holds,
                 "equivalent must imply specialized-equivalent");
        c.expect(!v[Relation::SpecializedRestriction].holds ||
                     v[Relation::ShallowSpecializedRestriction].holds,
                 "specialized-restriction must imply its shallow form");
        return v;
    };
    while (pairs < 1000) {
        PairedCatalog cat = random_clean_paired_catalog(rng, 5, 8);
        Ontology ont = load_ontology(cat.source, "<random>");
        dsl::ProtocolFile file_a = random_protocol_decl(rng, cat.acts, 6, "A");
        dsl::ProtocolFile file_b = rename_states(file_a);
        file_b.name = "B";
        dsl::ProtocolFile file_c = rename_states(file_b);
        file_c.name = "C";
        Protocol a = load_protocol(dsl::serialize(file_a), ont, "<a>");
        Protocol b = load_protocol(dsl::serialize(file_b), ont, "<b>");
        Protocol cc = load_protocol(dsl::serialize(file_c), ont, "<c>");

        RelationVerdict aa = checked_compare(a, a, ont);
        c.expect(aa[Relation::Equivalent].holds, "equivalence must be reflexive");
        c.expect(!aa[Relation::Restriction].holds,
                 "restriction must be irreflexive");

        RelationVerdict ab = checked_compare(a, b, ont);
        RelationVerdict ba = checked_compare(b, a, ont);
        c.expect(ab[Relation::Equivalent].holds == ba[Relation::Equivalent].holds,
                 "equivalence must be symmetric");
        RelationVerdict bc = checked_compare(b, cc, ont);
        RelationVerdict ac = checked_compare(a, cc, ont);
        if (ab[Relation::Equivalent].holds && bc[Relation::Equivalent].holds)
            c.expect(ac[Relation::Equivalent].holds,
                     "equivalence must be transitive");
        for (const std::string& law : relation_algebra_violations(ab, ba))
            c.expect(false, law);

        // A widened variant exercises the restriction side of the laws.
        dsl::ProtocolFile widened_file = file_a;
        widened_file.name = "W";
        if (add_arm(widened_file, cat.acts, rng)) {
            Protocol w = load_protocol(dsl::serialize(widened_file), ont, "<w>");
            RelationVerdict aw = checked_compare(a, w, ont);
            RelationVerdict wa = checked_compare(w, a, ont);
            c.expect(aw[Relation::Equivalent].holds ||
                         aw[Relation::Restriction].holds,
                     "widening must contain the original traces");
            for (const std::string& law : relation_algebra_violations(aw, wa))
                c.expect(false, law);
        }

        // A specialized variant exercises the specialization side.
        dsl::ProtocolFile special_file = specialize_labels(file_a, cat.twin);
        special_file.name = "S";
        Protocol s = load_protocol(dsl::serialize(special_file), ont, "<s>");
        RelationVerdict sa = checked_compare(s, a, ont);
        RelationVerdict as = checked_compare(a, s, ont);
        c.expect(sa[Relation::SpecializedEquivalent].holds,
                 "a label-specialized copy must be specialized-equivalent");
        c.expect(sa[Relation::SpecializedRestriction].holds,
                 "a label-specialized copy must be specialized-restricted");
        for (const std::string& law : relation_algebra_violations(sa, as))
            c.expect(false, law);
    }
    c.finish();
}

// 7. Parse-serialize-parse is idempotent for the catalog and the three
//    protocol files: the second serialization is byte-identical.
void criterion_7() {
    Criterion c(7, "catalog and protocol files round-trip byte-stable");
    {
        std::string text = catalog_text();
        dsl::OntologyParse first = dsl::parse_ontology_file(text, "catalog");
        c.expect(!dsl::has_errors(first.diagnostics), "catalog must parse");
        std::string once = dsl::serialize(first.file);
        dsl::OntologyParse second = dsl::parse_ontology_file(once, "catalog");
        c.expect(!dsl::has_errors(second.diagnostics),
                 "serialized catalog must parse");
        std::string twice = dsl::serialize(second.file);
        c.expect(once == twice, "catalog serialization must be byte-stable");
    }
    for (const char* path : {"data/asktime.sts", "data/p1.sts", "data/p2.sts"}) {
        std::string text = read_file(path);
        dsl::ProtocolParse first = dsl::parse_protocol_file(text, path);
        c.expect(!dsl::has_errors(first.diagnostics),
                 std::string(path) + " must parse");
        std::string once = dsl::serialize(first.file);
        dsl::ProtocolParse second = dsl::parse_protocol_file(once, path);
        c.expect(!dsl::has_errors(second.diagnostics),
                 std::string(path) + " reserialization must parse");
        std::string twice = dsl::serialize(second.file);
        c.expect(once == twice,
                 std::string(path) + " serialization must be byte-stable");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failed == 0) {
        std::cout << "acceptance: all 7 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failed << " criterion(s) failed\n";
    return 1;
}
