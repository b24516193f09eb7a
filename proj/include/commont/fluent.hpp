#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commont/error.hpp"

namespace commont {

// Logical time. Ticks are handed out by FluentStore only and increase
// strictly over the life of a store.
using Tick = std::uint64_t;

enum class FluentKind {
    Proposition,
    Acceptance,
    Commitment,
    ConditionalCommitment,
};

// An immutable fluent descriptor. Commitment kinds nest their condition (and,
// for conditional commitments, the conditioned-to proposition) as child
// descriptors; only Proposition and Acceptance may be nested.
class Fluent {
public:
    static Fluent proposition(std::string content);
    static Fluent acceptance(std::string signatory, std::string addressee,
                             std::string object);
    static Fluent commitment(std::string debtor, std::string creditor,
                             Fluent condition);
    static Fluent conditional_commitment(std::string debtor, std::string creditor,
                                         Fluent condition, Fluent conditioned_to);

    FluentKind kind() const { return kind_; }
    bool is_commitment_kind() const {
        return kind_ == FluentKind::Commitment ||
               kind_ == FluentKind::ConditionalCommitment;
    }

    // Proposition
    const std::string& content() const;
    // Acceptance
    const std::string& signatory() const;
    const std::string& addressee() const;
    const std::string& object() const;
    // Commitment / ConditionalCommitment
    const std::string& debtor() const;
    const std::string& creditor() const;
    const Fluent& condition() const;
    const Fluent& conditioned_to() const;

    friend bool operator==(const Fluent& a, const Fluent& b);
    friend bool operator!=(const Fluent& a, const Fluent& b) { return !(a == b); }
    // Structural order, so fluents can key sets and maps.
    friend bool operator<(const Fluent& a, const Fluent& b);

private:
    Fluent() = default;
    void require(bool ok, const char* accessor) const;

    FluentKind kind_ = FluentKind::Proposition;
    std::string content_;                          // Proposition
    std::string signatory_, addressee_, object_;   // Acceptance
    std::string debtor_, creditor_;                // commitment kinds
    std::vector<Fluent> nested_;                   // [condition(, conditioned_to)]
};

struct StampedFluent {
    Fluent fluent;
    Tick stamped_at = 0;
};

bool operator==(const StampedFluent& a, const StampedFluent& b);

// The set of fluents holding at a moment, with the clock that stamps them.
// Structural uniqueness (ignoring stamps) is maintained by initiate(), which
// refreshes the stamp of an already-active fluent instead of duplicating it.
class FluentStore {
public:
    Tick clock() const { return clock_; }

    // Advances the clock one tick and returns the new value. Ticks start at 1.
    Tick next_tick() { return ++clock_; }

    // Active fluents in ascending stamp order.
    const std::vector<StampedFluent>& active() const { return active_; }

    bool contains(const Fluent& f) const;
    const StampedFluent* find(const Fluent& f) const;

    // Inserts `f` stamped `at`; a structurally identical active fluent is
    // replaced. `at` must come from this store's clock.
    void initiate(Fluent f, Tick at);

    // Removes the structurally identical active fluent, if present.
    bool terminate(const Fluent& f);

    friend bool operator==(const FluentStore& a, const FluentStore& b);

private:
    std::vector<StampedFluent> active_;
    Tick clock_ = 0;
};

}  // namespace commont
