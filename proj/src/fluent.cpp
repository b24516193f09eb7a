#include "commont/fluent.hpp"

#include <algorithm>
#include <tuple>

namespace commont {

namespace {

const char* kind_name(FluentKind kind) {
    switch (kind) {
        case FluentKind::Proposition: return "Proposition";
        case FluentKind::Acceptance: return "Acceptance";
        case FluentKind::Commitment: return "Commitment";
        case FluentKind::ConditionalCommitment: return "ConditionalCommitment";
    }
    return "?";
}

void check_nestable(const Fluent& f, const char* where) {
    if (f.is_commitment_kind())
        throw SemanticsError(std::string(where) +
                             " of a commitment must be a proposition or an "
                             "acceptance, not a nested commitment");
}

}  // namespace

Fluent Fluent::proposition(std::string content) {
    Fluent f;
    f.kind_ = FluentKind::Proposition;
    f.content_ = std::move(content);
    return f;
}

Fluent Fluent::acceptance(std::string signatory, std::string addressee,
                          std::string object) {
    Fluent f;
    f.kind_ = FluentKind::Acceptance;
    f.signatory_ = std::move(signatory);
    f.addressee_ = std::move(addressee);
    f.object_ = std::move(object);
    return f;
}

Fluent Fluent::commitment(std::string debtor, std::string creditor,
                          Fluent condition) {
    check_nestable(condition, "the condition");
    Fluent f;
    f.kind_ = FluentKind::Commitment;
    f.debtor_ = std::move(debtor);
    f.creditor_ = std::move(creditor);
    f.nested_.push_back(std::move(condition));
    return f;
}

Fluent Fluent::conditional_commitment(std::string debtor, std::string creditor,
                                      Fluent condition, Fluent conditioned_to) {
    check_nestable(condition, "the condition");
    check_nestable(conditioned_to, "the conditioned-to part");
    Fluent f;
    f.kind_ = FluentKind::ConditionalCommitment;
    f.debtor_ = std::move(debtor);
    f.creditor_ = std::move(creditor);
    f.nested_.push_back(std::move(condition));
    f.nested_.push_back(std::move(conditioned_to));
    return f;
}

void Fluent::require(bool ok, const char* accessor) const {
    if (!ok)
        throw SemanticsError(std::string("fluent accessor '") + accessor +
                             "' used on a " + kind_name(kind_) + " fluent");
}

const std::string& Fluent::content() const {
    require(kind_ == FluentKind::Proposition, "content");
    return content_;
}

const std::string& Fluent::signatory() const {
    require(kind_ == FluentKind::Acceptance, "signatory");
    return signatory_;
}

const std::string& Fluent::addressee() const {
    require(kind_ == FluentKind::Acceptance, "addressee");
    return addressee_;
}

const std::string& Fluent::object() const {
    require(kind_ == FluentKind::Acceptance, "object");
    return object_;
}

const std::string& Fluent::debtor() const {
    require(is_commitment_kind(), "debtor");
    return debtor_;
}

const std::string& Fluent::creditor() const {
    require(is_commitment_kind(), "creditor");
    return creditor_;
}

const Fluent& Fluent::condition() const {
    require(is_commitment_kind(), "condition");
    return nested_[0];
}

const Fluent& Fluent::conditioned_to() const {
    require(kind_ == FluentKind::ConditionalCommitment, "conditioned_to");
    return nested_[1];
}

bool operator==(const Fluent& a, const Fluent& b) {
    return a.kind_ == b.kind_ && a.content_ == b.content_ &&
           a.signatory_ == b.signatory_ && a.addressee_ == b.addressee_ &&
           a.object_ == b.object_ && a.debtor_ == b.debtor_ &&
           a.creditor_ == b.creditor_ && a.nested_ == b.nested_;
}

bool operator<(const Fluent& a, const Fluent& b) {
    auto key = [](const Fluent& f) {
        return std::tie(f.kind_, f.content_, f.signatory_, f.addressee_,
                        f.object_, f.debtor_, f.creditor_);
    };
    if (key(a) != key(b)) return key(a) < key(b);
    return std::lexicographical_compare(a.nested_.begin(), a.nested_.end(),
                                        b.nested_.begin(), b.nested_.end());
}

bool operator==(const StampedFluent& a, const StampedFluent& b) {
    return a.stamped_at == b.stamped_at && a.fluent == b.fluent;
}

bool FluentStore::contains(const Fluent& f) const { return find(f) != nullptr; }

const StampedFluent* FluentStore::find(const Fluent& f) const {
    for (const StampedFluent& sf : active_)
        if (sf.fluent == f) return &sf;
    return nullptr;
}

void FluentStore::initiate(Fluent f, Tick at) {
    terminate(f);
    // Stamps only ever grow, so appending keeps active_ sorted by stamp.
    active_.push_back({std::move(f), at});
}

bool FluentStore::terminate(const Fluent& f) {
    auto it = std::find_if(active_.begin(), active_.end(),
                           [&](const StampedFluent& sf) { return sf.fluent == f; });
    if (it == active_.end()) return false;
    active_.erase(it);
    return true;
}

bool operator==(const FluentStore& a, const FluentStore& b) {
    return a.clock_ == b.clock_ && a.active_ == b.active_;
}

}  // namespace commont
