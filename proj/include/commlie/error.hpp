#pragma once

#include <stdexcept>
#include <string>

namespace commlie {

/// Failure categories. The C API and the CLI map these onto status and exit codes.
enum class ErrorKind {
    Dimension,     // shapes of operands do not fit together
    Precondition,  // an algebra/module axiom or a caller contract does not hold
    Invariant,     // an internal consistency check failed (indicates a bug)
    Parse,         // malformed input text or options
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace commlie
