#include "commont/ontology.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace commont {

namespace {

const std::vector<std::string> kBuiltinActs = {
    "CommunicationAct", "Assertive", "Directive", "Commissive", "Expressive",
    "Declarative",      "Request",   "Accept",    "Responsive",
};

std::string where(const dsl::SourceSpan& span) {
    return span.file + ":" + std::to_string(span.line);
}

}  // namespace

Ontology::Ontology() {
    auto add_builtin = [this](const std::string& name,
                              std::vector<std::string> parents) {
        ActClass cls;
        cls.name = name;
        cls.parents = std::move(parents);
        acts_.emplace(name, std::move(cls));
        act_order_.push_back(name);
    };
    add_builtin("CommunicationAct", {});
    add_builtin("Assertive", {"CommunicationAct"});
    add_builtin("Directive", {"CommunicationAct"});
    add_builtin("Commissive", {"CommunicationAct"});
    add_builtin("Expressive", {"CommunicationAct"});
    add_builtin("Declarative", {"CommunicationAct"});
    add_builtin("Request", {"Directive"});
    add_builtin("Accept", {"Declarative"});
    add_builtin("Responsive", {"Assertive"});
}

const std::vector<std::string>& Ontology::builtin_act_names() {
    return kBuiltinActs;
}

bool Ontology::is_builtin(const std::string& name) const {
    return std::find(kBuiltinActs.begin(), kBuiltinActs.end(), name) !=
           kBuiltinActs.end();
}

bool Ontology::has_act(const std::string& name) const {
    return acts_.count(name) != 0;
}

bool Ontology::has_content(const std::string& name) const {
    return contents_.count(name) != 0;
}

const ActClass& Ontology::act(const std::string& name) const {
    auto it = acts_.find(name);
    if (it == acts_.end())
        throw OntologyError("unknown act class '" + name + "'");
    return it->second;
}

const ContentClass& Ontology::content(const std::string& name) const {
    auto it = contents_.find(name);
    if (it == contents_.end())
        throw OntologyError("unknown content class '" + name + "'");
    return it->second;
}

void Ontology::add_file(const dsl::OntologyFile& file) {
    // Pass 1: register names so forward references within the file resolve.
    for (const dsl::ContentDecl& c : file.contents) {
        if (acts_.count(c.name) || contents_.count(c.name))
            throw OntologyError(where(c.span) + ": class '" + c.name +
                                "' already declared");
        ContentClass cls;
        cls.name = c.name;
        cls.parents = c.parents;
        contents_.emplace(c.name, std::move(cls));
        content_order_.push_back(c.name);
    }
    for (const dsl::ActDecl& a : file.acts) {
        if (acts_.count(a.name) || contents_.count(a.name))
            throw OntologyError(where(a.span) + ": class '" + a.name +
                                "' already declared");
        ActClass cls;
        cls.name = a.name;
        cls.parents = a.parents;
        cls.content_class = a.content;
        cls.in_reply_to = a.reply_to;
        cls.system_tag = a.system;
        cls.condition_class = a.condition;
        acts_.emplace(a.name, std::move(cls));
        act_order_.push_back(a.name);
    }

    // Pass 2: referential integrity.
    for (const dsl::ContentDecl& c : file.contents) {
        for (const std::string& p : c.parents) {
            if (contents_.count(p)) continue;
            if (acts_.count(p))
                throw OntologyError(where(c.span) + ": content class '" + c.name +
                                    "' names act class '" + p + "' as parent");
            throw OntologyError(where(c.span) + ": unknown parent '" + p +
                                "' of content class '" + c.name + "'");
        }
    }
    for (const dsl::ActDecl& a : file.acts) {
        for (const std::string& p : a.parents) {
            if (acts_.count(p)) continue;
            if (contents_.count(p))
                throw OntologyError(where(a.span) + ": act class '" + a.name +
                                    "' names content class '" + p + "' as parent");
            throw OntologyError(where(a.span) + ": unknown parent '" + p +
                                "' of act class '" + a.name + "'");
        }
        if (a.content && !contents_.count(*a.content))
            throw OntologyError(where(a.span) + ": act class '" + a.name +
                                "' names unknown content class '" + *a.content + "'");
        if (a.condition && !contents_.count(*a.condition))
            throw OntologyError(where(a.span) + ": act class '" + a.name +
                                "' names unknown content class '" + *a.condition + "'");
        if (a.reply_to && !acts_.count(*a.reply_to))
            throw OntologyError(where(a.span) + ": act class '" + a.name +
                                "' names unknown act class '" + *a.reply_to +
                                "' in replyto");
    }

    // Pass 3: acyclicity of both parent graphs (iterative three-color DFS).
    auto check_acyclic = [](const auto& classes, const char* kind) {
        std::map<std::string, int> color;  // 0 new, 1 open, 2 done
        for (const auto& [root, cls] : classes) {
            (void)cls;
            if (color[root] == 2) continue;
            std::vector<std::pair<std::string, std::size_t>> stack;
            stack.emplace_back(root, 0);
            color[root] = 1;
            while (!stack.empty()) {
                auto& [name, next] = stack.back();
                const auto& parents = classes.at(name).parents;
                if (next >= parents.size()) {
                    color[name] = 2;
                    stack.pop_back();
                    continue;
                }
                const std::string& parent = parents[next++];
                int& c = color[parent];
                if (c == 1)
                    throw OntologyError(std::string("cycle in ") + kind +
                                        " hierarchy through class '" + parent + "'");
                if (c == 0) {
                    c = 1;
                    stack.emplace_back(parent, 0);
                }
            }
        }
    };
    check_acyclic(acts_, "act");
    check_acyclic(contents_, "content");

    // Pass 4: a content annotation must specialize every annotated ancestor's.
    for (const dsl::ActDecl& a : file.acts) {
        if (!a.content) continue;
        std::set<std::string> seen{a.name};
        std::deque<std::string> queue(a.parents.begin(), a.parents.end());
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            if (!seen.insert(cur).second) continue;
            const ActClass& anc = acts_.at(cur);
            if (anc.content_class && !subsumes(*anc.content_class, *a.content))
                throw OntologyError(
                    where(a.span) + ": content '" + *a.content + "' of act class '" +
                    a.name + "' is not subsumed by content '" + *anc.content_class +
                    "' of ancestor '" + cur + "'");
            queue.insert(queue.end(), anc.parents.begin(), anc.parents.end());
        }
    }
}

bool Ontology::subsumes(const std::string& general,
                        const std::string& specific) const {
    bool acts = has_act(general);
    if (!acts && !has_content(general))
        throw OntologyError("unknown class '" + general + "'");
    if (acts ? !has_act(specific) : !has_content(specific)) {
        if (acts ? has_content(specific) : has_act(specific))
            throw OntologyError("classes '" + general + "' and '" + specific +
                                "' belong to different hierarchies");
        throw OntologyError("unknown class '" + specific + "'");
    }
    if (general == specific) return true;
    std::set<std::string> seen{specific};
    std::deque<std::string> queue{specific};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        if (cur == general) return true;
        const auto& parents =
            acts ? acts_.at(cur).parents : contents_.at(cur).parents;
        for (const std::string& p : parents)
            if (seen.insert(p).second) queue.push_back(p);
    }
    return false;
}

std::optional<std::string> Ontology::nearest_annotation(
    const std::string& act_name, std::optional<std::string> ActClass::*slot,
    const char* what) const {
    // Breadth-first over the parent graph; the first layer holding any value
    // decides. Distinct values within that layer have no principled winner.
    std::set<std::string> seen{act_name};
    std::vector<std::string> layer{act_name};
    while (!layer.empty()) {
        std::set<std::string> found;
        for (const std::string& name : layer) {
            const ActClass& cls = act(name);
            if (cls.*slot) found.insert(*(cls.*slot));
        }
        if (found.size() == 1) return *found.begin();
        if (found.size() > 1)
            throw OntologyError("act class '" + act_name +
                                "' inherits conflicting " + what +
                                " annotations at equal distance");
        std::vector<std::string> next;
        for (const std::string& name : layer)
            for (const std::string& p : act(name).parents)
                if (seen.insert(p).second) next.push_back(p);
        layer = std::move(next);
    }
    return std::nullopt;
}

std::optional<std::string> Ontology::content_of(const std::string& act_name) const {
    return nearest_annotation(act_name, &ActClass::content_class, "content");
}

std::optional<std::string> Ontology::reply_to_of(const std::string& act_name) const {
    return nearest_annotation(act_name, &ActClass::in_reply_to, "replyto");
}

std::optional<std::string> Ontology::condition_of(const std::string& act_name) const {
    return nearest_annotation(act_name, &ActClass::condition_class, "condition");
}

std::string Ontology::closest_ancestor_among(
    const std::string& act_name, const std::vector<std::string>& candidates) const {
    std::set<std::string> wanted(candidates.begin(), candidates.end());
    std::set<std::string> seen{act_name};
    std::vector<std::string> layer{act_name};
    while (!layer.empty()) {
        std::vector<std::string> hits;
        for (const std::string& name : layer)
            if (wanted.count(name)) hits.push_back(name);
        if (hits.size() == 1) return hits.front();
        if (hits.size() > 1) {
            // Prefer the unique candidate below all the others; incomparable
            // candidates at the same distance are a genuine ambiguity.
            for (const std::string& h : hits) {
                bool least = true;
                for (const std::string& other : hits)
                    if (other != h && !subsumes(other, h)) least = false;
                if (least) return h;
            }
            throw OntologyError("act class '" + act_name +
                                "' has incomparable candidate ancestors '" +
                                hits[0] + "' and '" + hits[1] +
                                "' at equal distance");
        }
        std::set<std::string> next_set;
        std::vector<std::string> next;
        for (const std::string& name : layer)
            for (const std::string& p : act(name).parents)
                if (seen.insert(p).second) next.push_back(p);
        layer = std::move(next);
    }
    throw OntologyError("act class '" + act_name +
                        "' has no ancestor among the expected classes");
}

std::vector<std::string> Ontology::act_names() const { return act_order_; }

std::vector<std::string> Ontology::content_names() const { return content_order_; }

dsl::OntologyFile Ontology::to_file() const {
    dsl::OntologyFile file;
    for (const std::string& name : content_order_) {
        const ContentClass& cls = contents_.at(name);
        dsl::ContentDecl decl;
        decl.name = cls.name;
        decl.parents = cls.parents;
        file.contents.push_back(std::move(decl));
    }
    for (const std::string& name : act_order_) {
        if (is_builtin(name)) continue;
        const ActClass& cls = acts_.at(name);
        dsl::ActDecl decl;
        decl.name = cls.name;
        decl.parents = cls.parents;
        decl.content = cls.content_class;
        decl.reply_to = cls.in_reply_to;
        decl.system = cls.system_tag;
        decl.condition = cls.condition_class;
        file.acts.push_back(std::move(decl));
    }
    return file;
}

Ontology load_ontology(std::string_view text, std::string_view filename) {
    dsl::OntologyParse parsed = dsl::parse_ontology_file(text, filename);
    if (dsl::has_errors(parsed.diagnostics))
        throw LoadError("ontology file '" + std::string(filename) +
                            "' has syntax errors",
                        parsed.diagnostics);
    Ontology ont;
    ont.add_file(parsed.file);
    return ont;
}

Ontology load_ontology_files(
    const std::vector<std::pair<std::string, std::string>>& named_texts) {
    Ontology ont;
    for (const auto& [filename, text] : named_texts) {
        dsl::OntologyParse parsed = dsl::parse_ontology_file(text, filename);
        if (dsl::has_errors(parsed.diagnostics))
            throw LoadError("ontology file '" + filename + "' has syntax errors",
                            parsed.diagnostics);
        ont.add_file(parsed.file);
    }
    return ont;
}

}  // namespace commont
