#pragma once

// Shared fixture texts and file loading for the test suites. Tests run with
// the repository root as working directory, so the data/ catalog is in reach.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "commont/ontology.hpp"
#include "commont/protocol.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("test fixture missing: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string catalog_text() { return read_file("data/catalog.ont"); }
inline std::string asktime_text() { return read_file("data/asktime.sts"); }
inline std::string p1_text() { return read_file("data/p1.sts"); }
inline std::string p2_text() { return read_file("data/p2.sts"); }

inline const commont::Ontology& catalog() {
    static const commont::Ontology ont =
        commont::load_ontology(catalog_text(), "data/catalog.ont");
    return ont;
}

inline commont::Protocol load_fixture_protocol(const std::string& path) {
    return commont::load_protocol(read_file(path), catalog(), path);
}

// AskTime cut short: the conversation may end right after the accept, where
// commitment C1 is still active.
inline const char* truncated_asktime_text() {
    return "protocol AskTimeShort\n"
           "roles A B\n"
           "state S0 initial\n"
           "state S1\n"
           "state S2 final\n"
           "transition S0 -> S1 on TimeRequest from A to B\n"
           "transition S1 -> S2 on TimeAccept from B to A\n";
}

// One state, zero transitions: a single empty run.
inline const char* degenerate_text() {
    return "protocol Degenerate\n"
           "roles A B\n"
           "state S0 initial final\n";
}

// Two request/accept/inform arms branching at the initial state.
inline const char* two_arm_text() {
    return "protocol TwoArm\n"
           "roles A B\n"
           "state S0 initial\n"
           "state S1\n"
           "state S2\n"
           "state S3 final\n"
           "state S4\n"
           "state S5\n"
           "state S6 final\n"
           "transition S0 -> S1 on RequestTemp from A to B\n"
           "transition S1 -> S2 on AcceptTemp from B to A\n"
           "transition S2 -> S3 on TempInform from B to A\n"
           "transition S0 -> S4 on RequestPulse from A to B\n"
           "transition S4 -> S5 on AcceptPulse from B to A\n"
           "transition S5 -> S6 on PulseInform from B to A\n";
}

// The temperature arm alone; its trace set is a strict subset of TwoArm's.
inline const char* one_arm_text() {
    return "protocol OneArm\n"
           "roles A B\n"
           "state S0 initial\n"
           "state S1\n"
           "state S2\n"
           "state S3 final\n"
           "transition S0 -> S1 on RequestTemp from A to B\n"
           "transition S1 -> S2 on AcceptTemp from B to A\n"
           "transition S2 -> S3 on TempInform from B to A\n";
}

// A cycle: request/accept/inform looping back to the start.
inline const char* cyclic_text() {
    return "protocol Loop\n"
           "roles A B\n"
           "state S0 initial final\n"
           "state S1\n"
           "state S2\n"
           "transition S0 -> S1 on TimeRequest from A to B\n"
           "transition S1 -> S2 on TimeAccept from B to A\n"
           "transition S2 -> S0 on TimeInform from B to A\n";
}

}  // namespace testsupport
