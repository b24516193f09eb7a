#pragma once

// Algebraic laws the relation verdicts must satisfy on every protocol pair.
// Shared between the unit suite and the acceptance checks.

#include <string>
#include <vector>

#include "commont/relations.hpp"

namespace testsupport {

// Laws over compare(A, B) and compare(B, A). Returns one message per
// violated law; empty means the pair is consistent.
inline std::vector<std::string> relation_algebra_violations(
    const commont::RelationVerdict& ab, const commont::RelationVerdict& ba) {
    using commont::Relation;
    using commont::RelationVerdict;
    std::vector<std::string> bad;
    auto require = [&](bool ok, const char* law) {
        if (!ok) bad.emplace_back(law);
    };
    constexpr Relation eq = Relation::Equivalent;
    constexpr Relation re = Relation::Restriction;
    constexpr Relation se = Relation::SpecializedEquivalent;
    constexpr Relation sr = Relation::SpecializedRestriction;
    constexpr Relation heq = Relation::ShallowEquivalent;
    constexpr Relation hre = Relation::ShallowRestriction;
    constexpr Relation hse = Relation::ShallowSpecializedEquivalent;
    constexpr Relation hsr = Relation::ShallowSpecializedRestriction;

    for (const RelationVerdict* v : {&ab, &ba}) {
        const RelationVerdict& w = *v;
        require(!(w[eq].holds && w[re].holds), "equivalence excludes restriction");
        require(!(w[heq].holds && w[hre].holds),
                "shallow equivalence excludes shallow restriction");
        require(!w[eq].holds || w[se].holds,
                "equivalent implies specialized-equivalent");
        require(!w[eq].holds || w[sr].holds,
                "equivalent implies specialized-restriction");
        require(!w[eq].holds || w[heq].holds,
                "equivalent implies shallow-equivalent");
        require(!w[re].holds || w[sr].holds,
                "restriction implies specialized-restriction");
        require(!w[re].holds || w[heq].holds || w[hre].holds,
                "restriction implies a shallow containment");
        require(!w[se].holds || w[hse].holds,
                "specialized-equivalent implies its shallow form");
        require(!w[sr].holds || w[hsr].holds,
                "specialized-restriction implies its shallow form");
        require(!w[heq].holds || w[hse].holds,
                "shallow-equivalent implies shallow-specialized-equivalent");
        require(!w[hre].holds || w[hsr].holds,
                "shallow-restriction implies its specialized form");
        require(!w[hse].holds || w[hse].matching.has_value(),
                "shallow-specialized-equivalent carries a matching");
        require(!w[hsr].holds || w[hsr].matching.has_value(),
                "shallow-specialized-restriction carries a matching");
        if (w.strongest) {
            require(w[*w.strongest].holds, "the strongest relation holds");
            for (Relation r : commont::kAllRelations) {
                if (r == *w.strongest) break;
                require(!w[r].holds, "nothing stronger than strongest holds");
            }
        } else {
            require(!w.any_holds(), "strongest is set when any relation holds");
        }
        for (Relation r : commont::kAllRelations)
            require(w[r].holds || !w[r].note.empty(),
                    "failed relations carry a counterexample note");
    }

    require(ab[eq].holds == ba[eq].holds, "equivalence is symmetric");
    require(ab[heq].holds == ba[heq].holds, "shallow equivalence is symmetric");
    require(ab[se].holds == ba[se].holds,
            "specialized equivalence is orientation-free");
    require(ab[hse].holds == ba[hse].holds,
            "shallow specialized equivalence is orientation-free");
    require(!(ab[re].holds && ba[re].holds), "restriction is antisymmetric");
    require(!(ab[hre].holds && ba[hre].holds),
            "shallow restriction is antisymmetric");
    return bad;
}

}  // namespace testsupport
