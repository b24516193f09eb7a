#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commont/json_io.hpp"
#include "commont/ontology.hpp"
#include "commont/protocol.hpp"
#include "commont/relations.hpp"
#include "commont/render.hpp"
#include "commont/traces.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // violations found / relation absent / false
constexpr int kExitError = 2;     // parse, IO, or semantic failure

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw commont::Error("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

commont::Ontology load_ontologies(const std::vector<std::string>& paths) {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(paths.size());
    for (const std::string& path : paths) named.emplace_back(path, read_file(path));
    return commont::load_ontology_files(named);
}

commont::Protocol load_protocol_file(const std::string& path,
                                     const commont::Ontology& ont) {
    return commont::load_protocol(read_file(path), ont, path);
}

void print_diagnostics(const commont::LoadError& e) {
    for (const commont::dsl::Diagnostic& d : e.diagnostics())
        std::cerr << commont::dsl::format_diagnostic(d) << '\n';
}

struct CommonOptions {
    std::vector<std::string> ontology_paths;
    bool json = false;
};

void attach_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--ontology", opts.ontology_paths,
                    "Ontology file to load (repeatable; files merge)")
        ->type_name("FILE");
    cmd->add_flag("--json", opts.json, "Emit JSON instead of text");
}

int run_validate(const CommonOptions& opts, const std::string& protocol_path) {
    commont::Ontology ont = load_ontologies(opts.ontology_paths);
    commont::dsl::ProtocolParse parsed =
        commont::dsl::parse_protocol_file(read_file(protocol_path), protocol_path);
    if (commont::dsl::has_errors(parsed.diagnostics)) {
        for (const commont::dsl::Diagnostic& d : parsed.diagnostics)
            std::cerr << commont::dsl::format_diagnostic(d) << '\n';
        return kExitError;
    }
    commont::Protocol p = commont::Protocol::from_decl(parsed.file);
    commont::ValidationReport report =
        commont::validate(p, ont, commont::SemanticsRegistry::standard());

    if (opts.json) {
        std::cout << commont::json_of(report).dump(2) << '\n';
        return report.clean() ? kExitOk : kExitNegative;
    }

    for (const commont::ValidationIssue& issue : report.structural)
        std::cout << "violation: " << issue.message << " [" << issue.code << "]\n";
    if (report.cyclic)
        std::cout << "note: protocol '" << p.name()
                  << "' is cyclic; run checks skipped (use simulate "
                     "--max-steps for bounded exploration)\n";
    for (const commont::RunCheck& check : report.runs) {
        if (check.clean) continue;
        std::cout << "violation: run [";
        for (std::size_t i = 0; i < check.run.events.size(); ++i)
            std::cout << (i ? ", " : "") << check.run.events[i].act_class;
        std::cout << "] ends at final state " << check.final_state
                  << " with active commitments:";
        for (const commont::StampedFluent& sf : check.lingering)
            std::cout << ' ' << commont::to_text(sf);
        std::cout << '\n';
    }
    if (report.clean()) {
        std::cout << "protocol '" << p.name() << "': OK";
        if (report.runs_checked)
            std::cout << " (" << report.runs.size() << " run"
                      << (report.runs.size() == 1 ? "" : "s") << " checked)";
        std::cout << '\n';
        return kExitOk;
    }
    return kExitNegative;
}

int run_simulate(const CommonOptions& opts, const std::string& protocol_path,
                 const std::vector<std::string>& acts, std::size_t max_steps) {
    commont::Ontology ont = load_ontologies(opts.ontology_paths);
    commont::Protocol p = load_protocol_file(protocol_path, ont);
    if (acts.size() > max_steps)
        throw commont::Error("scripted run has " + std::to_string(acts.size()) +
                             " acts, over the --max-steps limit of " +
                             std::to_string(max_steps));
    std::vector<commont::ActEvent> events = commont::events_from_acts(p, acts);
    std::vector<commont::FluentStore> stores =
        commont::replay(events, ont, commont::SemanticsRegistry::standard());

    if (opts.json) {
        nlohmann::json steps = nlohmann::json::array();
        for (std::size_t i = 0; i < stores.size(); ++i) {
            nlohmann::json step = {{"fluents", commont::json_of(stores[i])}};
            step["event"] =
                i == 0 ? nlohmann::json() : commont::json_of(events[i - 1]);
            steps.push_back(std::move(step));
        }
        std::cout << nlohmann::json{{"protocol", p.name()},
                                    {"steps", std::move(steps)}}
                         .dump(2)
                  << '\n';
        return kExitOk;
    }

    for (std::size_t i = 0; i < stores.size(); ++i) {
        if (i > 0)
            std::cout << "-- " << events[i - 1].act_class << " from "
                      << events[i - 1].sender << " to " << events[i - 1].receiver
                      << '\n';
        std::cout << 'F' << i << " = " << commont::to_text(stores[i]) << '\n';
    }
    return kExitOk;
}

int run_traces(const CommonOptions& opts, const std::string& protocol_path) {
    commont::Ontology ont = load_ontologies(opts.ontology_paths);
    commont::Protocol p = load_protocol_file(protocol_path, ont);
    commont::TraceSet traces =
        commont::trace_set(p, ont, commont::SemanticsRegistry::standard());

    if (opts.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const commont::ProtocolTrace& t : traces)
            j.push_back(commont::json_of(t));
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    for (const commont::ProtocolTrace& t : traces)
        std::cout << commont::to_text(t) << '\n';
    return kExitOk;
}

int run_compare(const CommonOptions& opts, const std::string& path_a,
                const std::string& path_b) {
    commont::Ontology ont = load_ontologies(opts.ontology_paths);
    commont::Protocol a = load_protocol_file(path_a, ont);
    commont::Protocol b = load_protocol_file(path_b, ont);
    commont::RelationVerdict verdict =
        commont::compare(a, b, ont, commont::SemanticsRegistry::standard());

    if (opts.json) {
        nlohmann::json j = commont::json_of(verdict);
        j["first"] = a.name();
        j["second"] = b.name();
        std::cout << j.dump(2) << '\n';
        return verdict.any_holds() ? kExitOk : kExitNegative;
    }

    for (commont::Relation rel : commont::kAllRelations) {
        const commont::RelationResult& r = verdict[rel];
        std::cout << relation_name(rel) << ": " << (r.holds ? "yes" : "no");
        if (!r.note.empty()) std::cout << "  (" << r.note << ')';
        if (r.holds && r.matching)
            std::cout << "  map " << commont::to_text(*r.matching);
        std::cout << '\n';
    }
    std::cout << "strongest: "
              << (verdict.strongest ? relation_name(*verdict.strongest) : "none")
              << '\n';
    return verdict.any_holds() ? kExitOk : kExitNegative;
}

int run_subsumes(const CommonOptions& opts, const std::string& general,
                 const std::string& specific) {
    commont::Ontology ont = load_ontologies(opts.ontology_paths);
    bool result = ont.subsumes(general, specific);
    if (opts.json)
        std::cout << nlohmann::json{{"general", general},
                                    {"specific", specific},
                                    {"subsumes", result}}
                         .dump(2)
                  << '\n';
    else
        std::cout << (result ? "true" : "false") << '\n';
    return result ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commont: communication-act protocol modeling and comparison"};
    app.require_subcommand(1);

    CommonOptions validate_opts, simulate_opts, traces_opts, compare_opts,
        subsumes_opts;
    std::string validate_file, simulate_file, traces_file;
    std::string compare_a, compare_b, subsumes_general, subsumes_specific;
    std::vector<std::string> run_acts;
    std::size_t max_steps = 10000;

    CLI::App* validate =
        app.add_subcommand("validate", "Check a protocol's invariants");
    attach_common(validate, validate_opts);
    validate->add_option("protocol", validate_file, "Protocol file")
        ->required()
        ->type_name("FILE");

    CLI::App* simulate =
        app.add_subcommand("simulate", "Replay a scripted run step by step");
    attach_common(simulate, simulate_opts);
    simulate
        ->add_option("--run", run_acts,
                     "Comma-separated act classes to play from the initial state")
        ->delimiter(',')
        ->type_name("ACT[,ACT...]");
    simulate->add_option("--max-steps", max_steps, "Upper bound on run length")
        ->type_name("N");
    simulate->add_option("protocol", simulate_file, "Protocol file")
        ->required()
        ->type_name("FILE");

    CLI::App* traces =
        app.add_subcommand("traces", "Print every trace of an acyclic protocol");
    attach_common(traces, traces_opts);
    traces->add_option("protocol", traces_file, "Protocol file")
        ->required()
        ->type_name("FILE");

    CLI::App* compare = app.add_subcommand(
        "compare", "Decide the equivalence/restriction relations of two protocols");
    attach_common(compare, compare_opts);
    compare->add_option("first", compare_a, "First protocol file")
        ->required()
        ->type_name("FILE");
    compare->add_option("second", compare_b, "Second protocol file")
        ->required()
        ->type_name("FILE");

    CLI::App* subsumes = app.add_subcommand(
        "subsumes", "Ask whether one class subsumes another");
    attach_common(subsumes, subsumes_opts);
    subsumes->add_option("general", subsumes_general, "Candidate superclass")
        ->required()
        ->type_name("CLASS");
    subsumes->add_option("specific", subsumes_specific, "Candidate subclass")
        ->required()
        ->type_name("CLASS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (validate->parsed()) return run_validate(validate_opts, validate_file);
        if (simulate->parsed())
            return run_simulate(simulate_opts, simulate_file, run_acts, max_steps);
        if (traces->parsed()) return run_traces(traces_opts, traces_file);
        if (compare->parsed())
            return run_compare(compare_opts, compare_a, compare_b);
        if (subsumes->parsed())
            return run_subsumes(subsumes_opts, subsumes_general, subsumes_specific);
    } catch (const commont::LoadError& e) {
        std::cerr << "error: " << e.what() << '\n';
        print_diagnostics(e);
        return kExitError;
    } catch (const commont::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
