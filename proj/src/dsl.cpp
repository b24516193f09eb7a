#include "commont/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace commont::dsl {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

struct Token {
    enum class Kind { Word, Colon, Comma, Arrow, Equals };
    Kind kind;
    std::string text;
    int column;  // 1-based
};

// Splits one line into tokens. Hyphens are word characters except when they
// introduce the `->` arrow, so `A-RequestPulse` lexes as one word while
// `S0 -> S1` lexes as three tokens.
std::vector<Token> lex_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        int col = static_cast<int>(i) + 1;
        if (c == ':') {
            tokens.push_back({Token::Kind::Colon, ":", col});
            ++i;
        } else if (c == ',') {
            tokens.push_back({Token::Kind::Comma, ",", col});
            ++i;
        } else if (c == '=') {
            tokens.push_back({Token::Kind::Equals, "=", col});
            ++i;
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            tokens.push_back({Token::Kind::Arrow, "->", col});
            i += 2;
        } else if (is_word_char(c)) {
            std::size_t start = i;
            while (i < line.size() && is_word_char(line[i])) {
                if (line[i] == '-' && i + 1 < line.size() && line[i + 1] == '>') break;
                ++i;
            }
            tokens.push_back({Token::Kind::Word,
                              std::string(line.substr(start, i - start)), col});
        } else {
            tokens.push_back({Token::Kind::Word, std::string(1, c), col});
            ++i;
        }
    }
    return tokens;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, SourceSpan line_span,
               std::vector<Diagnostic>& diagnostics)
        : tokens_(std::move(tokens)), span_(std::move(line_span)),
          diagnostics_(diagnostics) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

    const Token* next() { return done() ? nullptr : &tokens_[pos_++]; }

    SourceSpan span_at(const Token* t) const {
        SourceSpan s = span_;
        if (t) s.column = t->column;
        return s;
    }

    SourceSpan span_here() const {
        SourceSpan s = span_;
        if (!done()) s.column = tokens_[pos_].column;
        else if (!tokens_.empty()) s.column = tokens_.back().column +
                                              static_cast<int>(tokens_.back().text.size());
        return s;
    }

    void error(const std::string& code, const std::string& message) {
        diagnostics_.push_back({Severity::Error, span_here(), code, message});
        failed_ = true;
    }

    void error_at(const Token* t, const std::string& code, const std::string& message) {
        diagnostics_.push_back({Severity::Error, span_at(t), code, message});
        failed_ = true;
    }

    bool failed() const { return failed_; }

    // Consumes one identifier word, or reports `code` and fails.
    std::optional<std::string> identifier(const std::string& code,
                                          const std::string& what) {
        const Token* t = next();
        if (!t || t->kind != Token::Kind::Word || !is_identifier(t->text)) {
            error_at(t, code, "expected " + what);
            return std::nullopt;
        }
        return t->text;
    }

    bool expect(Token::Kind kind, const std::string& code, const std::string& what) {
        const Token* t = next();
        if (!t || t->kind != kind) {
            error_at(t, code, "expected " + what);
            return false;
        }
        return true;
    }

    // Comma-separated identifier list; at least one element.
    std::vector<std::string> identifier_list(const std::string& code) {
        std::vector<std::string> names;
        auto first = identifier(code, "a class name");
        if (!first) return names;
        names.push_back(*first);
        while (peek() && peek()->kind == Token::Kind::Comma) {
            next();
            auto more = identifier(code, "a class name after ','");
            if (!more) return names;
            names.push_back(*more);
        }
        return names;
    }

    void expect_end(const std::string& code) {
        if (!done()) error(code, "unexpected trailing tokens");
    }

private:
    std::vector<Token> tokens_;
    SourceSpan span_;
    std::vector<Diagnostic>& diagnostics_;
    std::size_t pos_ = 0;
    bool failed_ = false;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace

bool is_identifier(std::string_view token) {
    if (token.empty() || !std::isalpha(static_cast<unsigned char>(token[0])))
        return false;
    return std::all_of(token.begin(), token.end(),
                       [](char c) { return is_word_char(c); });
}

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream out;
    out << d.span.file << ':' << d.span.line << ':' << d.span.column << ": "
        << (d.severity == Severity::Error ? "error" : "warning") << ": "
        << d.message << " [" << d.code << ']';
    return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

OntologyParse parse_ontology_file(std::string_view text, std::string_view filename) {
    OntologyParse result;
    auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        if (blank_or_comment(lines[n])) continue;
        SourceSpan line_span{std::string(filename), static_cast<int>(n) + 1, 1};
        LineParser p(lex_line(lines[n]), line_span, result.diagnostics);
        const Token* kw = p.next();
        if (!kw || kw->kind != Token::Kind::Word) {
            p.error_at(kw, "syntax.unknown-keyword", "expected a statement keyword");
            continue;
        }
        if (kw->text == "content") {
            ContentDecl decl;
            decl.span = p.span_here();
            auto name = p.identifier("ontology.bad-name", "a content class name");
            if (!name) continue;
            decl.name = *name;
            if (p.peek() && p.peek()->kind == Token::Kind::Colon) {
                p.next();
                decl.parents = p.identifier_list("ontology.bad-parent");
                if (p.failed()) continue;
            }
            p.expect_end("syntax.trailing-tokens");
            if (!p.failed()) result.file.contents.push_back(std::move(decl));
        } else if (kw->text == "act") {
            ActDecl decl;
            decl.span = p.span_here();
            auto name = p.identifier("ontology.bad-name", "an act class name");
            if (!name) continue;
            decl.name = *name;
            if (!p.expect(Token::Kind::Colon, "ontology.missing-parent",
                          "':' followed by at least one parent class"))
                continue;
            decl.parents = p.identifier_list("ontology.missing-parent");
            if (p.failed()) continue;
            bool ok = true;
            while (ok && !p.done()) {
                const Token* key = p.next();
                if (key->kind != Token::Kind::Word) {
                    p.error_at(key, "syntax.bad-attribute", "expected attribute name");
                    ok = false;
                    break;
                }
                if (!p.expect(Token::Kind::Equals, "syntax.bad-attribute",
                              "'=' after attribute name")) {
                    ok = false;
                    break;
                }
                auto value = p.identifier("syntax.bad-attribute", "attribute value");
                if (!value) {
                    ok = false;
                    break;
                }
                std::optional<std::string>* slot = nullptr;
                if (key->text == "content") slot = &decl.content;
                else if (key->text == "replyto") slot = &decl.reply_to;
                else if (key->text == "system") slot = &decl.system;
                else if (key->text == "condition") slot = &decl.condition;
                if (!slot) {
                    p.error_at(key, "syntax.unknown-attribute",
                               "unknown attribute '" + key->text + "'");
                    ok = false;
                } else if (slot->has_value()) {
                    p.error_at(key, "ontology.duplicate-attribute",
                               "attribute '" + key->text + "' given twice");
                    ok = false;
                } else {
                    *slot = *value;
                }
            }
            if (ok && !p.failed()) result.file.acts.push_back(std::move(decl));
        } else {
            p.error_at(kw, "syntax.unknown-keyword",
                       "unknown keyword '" + kw->text + "'");
        }
    }
    return result;
}

ProtocolParse parse_protocol_file(std::string_view text, std::string_view filename) {
    ProtocolParse result;
    auto& diags = result.diagnostics;
    auto lines = split_lines(text);

    bool saw_protocol = false;
    bool saw_roles = false;
    SourceSpan file_span{std::string(filename), 1, 1};

    for (std::size_t n = 0; n < lines.size(); ++n) {
        if (blank_or_comment(lines[n])) continue;
        SourceSpan line_span{std::string(filename), static_cast<int>(n) + 1, 1};
        LineParser p(lex_line(lines[n]), line_span, diags);
        const Token* kw = p.next();
        if (!kw || kw->kind != Token::Kind::Word) {
            p.error_at(kw, "syntax.unknown-keyword", "expected a statement keyword");
            continue;
        }
        if (kw->text == "protocol") {
            auto name = p.identifier("protocol.bad-name", "a protocol name");
            if (!name) continue;
            p.expect_end("syntax.trailing-tokens");
            if (p.failed()) continue;
            if (saw_protocol) {
                diags.push_back({Severity::Error, line_span, "protocol.duplicate-protocol",
                                 "more than one 'protocol' statement"});
                continue;
            }
            saw_protocol = true;
            result.file.name = *name;
        } else if (kw->text == "roles") {
            auto r1 = p.identifier("protocol.bad-role", "a role name");
            if (!r1) continue;
            auto r2 = p.identifier("protocol.bad-role", "a second role name");
            if (!r2) continue;
            p.expect_end("syntax.trailing-tokens");
            if (p.failed()) continue;
            if (*r1 == *r2) {
                diags.push_back({Severity::Error, line_span, "protocol.same-role",
                                 "the two roles must be distinct"});
                continue;
            }
            if (saw_roles) {
                diags.push_back({Severity::Error, line_span, "protocol.duplicate-roles",
                                 "more than one 'roles' statement"});
                continue;
            }
            saw_roles = true;
            result.file.roles = {*r1, *r2};
        } else if (kw->text == "state") {
            StateDecl decl;
            decl.span = line_span;
            auto name = p.identifier("protocol.bad-name", "a state id");
            if (!name) continue;
            decl.name = *name;
            bool ok = true;
            while (ok && !p.done()) {
                const Token* flag = p.next();
                if (flag->kind == Token::Kind::Word && flag->text == "initial") {
                    decl.initial = true;
                } else if (flag->kind == Token::Kind::Word && flag->text == "final") {
                    decl.final = true;
                } else {
                    p.error_at(flag, "protocol.bad-state-flag",
                               "expected 'initial' or 'final'");
                    ok = false;
                }
            }
            if (ok && !p.failed()) result.file.states.push_back(std::move(decl));
        } else if (kw->text == "transition") {
            TransitionDecl decl;
            decl.span = line_span;
            auto src = p.identifier("protocol.bad-name", "a source state id");
            if (!src) continue;
            decl.source = *src;
            if (!p.expect(Token::Kind::Arrow, "syntax.expected-token", "'->'")) continue;
            auto dst = p.identifier("protocol.bad-name", "a target state id");
            if (!dst) continue;
            decl.target = *dst;
            const Token* on = p.next();
            if (!on || on->kind != Token::Kind::Word || on->text != "on") {
                p.error_at(on, "syntax.expected-token", "expected 'on'");
                continue;
            }
            auto act = p.identifier("protocol.bad-name", "an act class name");
            if (!act) continue;
            decl.act_class = *act;
            const Token* from = p.next();
            if (!from || from->kind != Token::Kind::Word || from->text != "from") {
                p.error_at(from, "syntax.expected-token", "expected 'from'");
                continue;
            }
            auto sender = p.identifier("protocol.bad-role", "a sender role");
            if (!sender) continue;
            decl.sender = *sender;
            const Token* to = p.next();
            if (!to || to->kind != Token::Kind::Word || to->text != "to") {
                p.error_at(to, "syntax.expected-token", "expected 'to'");
                continue;
            }
            auto receiver = p.identifier("protocol.bad-role", "a receiver role");
            if (!receiver) continue;
            decl.receiver = *receiver;
            p.expect_end("syntax.trailing-tokens");
            if (!p.failed()) result.file.transitions.push_back(std::move(decl));
        } else {
            p.error_at(kw, "syntax.unknown-keyword",
                       "unknown keyword '" + kw->text + "'");
        }
    }

    // File-level discipline. Every check below names the offending line.
    if (!saw_protocol)
        diags.push_back({Severity::Error, file_span, "protocol.missing-protocol",
                         "no 'protocol' statement"});
    if (!saw_roles)
        diags.push_back({Severity::Error, file_span, "protocol.missing-roles",
                         "no 'roles' statement"});

    std::set<std::string> state_names;
    const StateDecl* initial = nullptr;
    bool any_final = false;
    for (const StateDecl& s : result.file.states) {
        if (!state_names.insert(s.name).second)
            diags.push_back({Severity::Error, s.span, "protocol.duplicate-state",
                             "state '" + s.name + "' declared twice"});
        if (s.initial) {
            if (initial)
                diags.push_back({Severity::Error, s.span, "protocol.duplicate-initial",
                                 "more than one state marked initial"});
            else
                initial = &s;
        }
        if (s.final) any_final = true;
    }
    if (!initial)
        diags.push_back({Severity::Error, file_span, "protocol.missing-initial",
                         "no state marked initial"});
    if (!any_final)
        diags.push_back({Severity::Error, file_span, "protocol.missing-final",
                         "no state marked final"});

    for (const TransitionDecl& t : result.file.transitions) {
        for (const std::string* endpoint : {&t.source, &t.target}) {
            if (!state_names.count(*endpoint))
                diags.push_back({Severity::Error, t.span, "protocol.unknown-state",
                                 "transition names undeclared state '" + *endpoint + "'"});
        }
        if (saw_roles) {
            const auto& roles = result.file.roles;
            for (const std::string* role : {&t.sender, &t.receiver}) {
                if (*role != roles[0] && *role != roles[1])
                    diags.push_back({Severity::Error, t.span, "protocol.unknown-role",
                                     "transition names undeclared role '" + *role + "'"});
            }
            if (t.sender == t.receiver)
                diags.push_back({Severity::Error, t.span, "protocol.same-role",
                                 "sender and receiver must differ"});
        }
    }

    return result;
}

std::string serialize(const OntologyFile& file) {
    std::ostringstream out;
    for (const ContentDecl& c : file.contents) {
        out << "content " << c.name;
        for (std::size_t i = 0; i < c.parents.size(); ++i)
            out << (i == 0 ? " : " : ", ") << c.parents[i];
        out << '\n';
    }
    for (const ActDecl& a : file.acts) {
        out << "act " << a.name;
        for (std::size_t i = 0; i < a.parents.size(); ++i)
            out << (i == 0 ? " : " : ", ") << a.parents[i];
        if (a.content) out << " content=" << *a.content;
        if (a.reply_to) out << " replyto=" << *a.reply_to;
        if (a.system) out << " system=" << *a.system;
        if (a.condition) out << " condition=" << *a.condition;
        out << '\n';
    }
    return out.str();
}

std::string serialize(const ProtocolFile& file) {
    std::ostringstream out;
    out << "protocol " << file.name << '\n';
    out << "roles " << file.roles[0] << ' ' << file.roles[1] << '\n';
    for (const StateDecl& s : file.states) {
        out << "state " << s.name;
        if (s.initial) out << " initial";
        if (s.final) out << " final";
        out << '\n';
    }
    for (const TransitionDecl& t : file.transitions) {
        out << "transition " << t.source << " -> " << t.target << " on "
            << t.act_class << " from " << t.sender << " to " << t.receiver << '\n';
    }
    return out.str();
}

}  // namespace commont::dsl
