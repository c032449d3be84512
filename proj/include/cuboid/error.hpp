#pragma once

#include <stdexcept>
#include <string>

namespace cuboid {

enum class ErrorKind {
    MalformedInput,
    UnsupportedDegree,
    Domain,
    Conflict,
    UnboundAngle,
    NonRationalizable,
    Singular,
    Inapplicable,
    Parse,
    Io,
};

const char* kind_name(ErrorKind k) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cuboid
