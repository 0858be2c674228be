#pragma once

#include <stdexcept>
#include <string>

namespace endowlab {

// Exit-code contract shared by every CLI subcommand.
enum class ExitCode : int {
    ok = 0,
    scenario = 2,
    verification = 3,
    usage = 64,
    data = 65,
    resource = 70,
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual ExitCode exit_code() const noexcept { return ExitCode::data; }
};

// Malformed or unknown input: bad identifiers, schema violations.
class InputError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::resource; }
};

// The ground-model hypothesis of a scenario does not hold at this horizon.
class ScenarioError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::scenario; }
};

class UsageError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::usage; }
};

}  // namespace endowlab
