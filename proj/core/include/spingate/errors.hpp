#pragma once

#include <stdexcept>
#include <string>

namespace spingate {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- state-core ----

class InconsistentSpinCount : public Error {
public:
    using Error::Error;
};

class NormExceedsOne : public Error {
public:
    using Error::Error;
};

class UnknownMode : public Error {
public:
    using Error::Error;
};

class SpinIndexOutOfRange : public Error {
public:
    using Error::Error;
};

class IncompatibleShapes : public Error {
public:
    using Error::Error;
};

class ModeCollision : public Error {
public:
    using Error::Error;
};

class UncoveredMode : public Error {
public:
    using Error::Error;
};

class EmptyState : public Error {
public:
    using Error::Error;
};

// ---- cavity-model ----

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

// ---- circuit-engine ----

class NonUnitInput : public Error {
public:
    using Error::Error;
};

/// Category of a netlist parse/validation failure.
enum class ParseErrorKind {
    Syntax,
    UnknownKeyword,
    DuplicateOutcomeLabel,
    UncoveredOutcome,
    DanglingMode,
};

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
        : Error("netlist:" + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
          kind_(kind),
          line_(line),
          column_(column) {}

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

// ---- metrics / cli ----

class ZeroDetectionProbability : public Error {
public:
    using Error::Error;
};

class BadInputSpec : public Error {
public:
    using Error::Error;
};

class WrongLength : public Error {
public:
    using Error::Error;
};

}  // namespace spingate
