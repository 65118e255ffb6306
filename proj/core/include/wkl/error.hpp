#pragma once

#include <stdexcept>
#include <string>

namespace wkl {

enum class ErrorKind {
    InvalidArgument,
    NotInDenseCell,   // g outside P+ K_C P-
    NotInCell,        // certified g outside P+ K_C N_C
    Inconclusive,     // Newton failed without a certificate
    NotUnipotent,
    OutsideSubspace,
    Divergent,
    Unsupported,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace wkl
