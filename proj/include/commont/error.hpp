#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commont/dsl.hpp"

namespace commont {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ontology construction or lookup failure (unknown class, cycle,
/// content restriction breach, ambiguous resolution).
class OntologyError : public Error {
public:
    using Error::Error;
};

/// Effect-template resolution or event application failure.
class SemanticsError : public Error {
public:
    using Error::Error;
};

/// Structural protocol failure (determinism, reachability, bad run).
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// Raised by run enumeration when the reachable transition graph has a
/// cycle; such protocols only support bounded simulation.
class CyclicProtocolError : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

/// A run ended in a final state whose store still holds a commitment.
class FinalStateError : public Error {
public:
    using Error::Error;
};

/// Wraps parser/builder diagnostics when loading from text fails.
class LoadError : public Error {
public:
    LoadError(const std::string& summary, std::vector<dsl::Diagnostic> diagnostics)
        : Error(summary), diagnostics_(std::move(diagnostics)) {}

    const std::vector<dsl::Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<dsl::Diagnostic> diagnostics_;
};

}  // namespace commont
