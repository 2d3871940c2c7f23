#pragma once

#include <stdexcept>
#include <string>

namespace polardisc {

enum class ErrorKind {
    invalid_input,
    parse_error,
    invalid_descriptor,
    precision_exhausted,
    insufficient_truncation,
    infinite_intersection,
    incomplete_semigroup,
    internal_error,
};

const char* error_kind_name(ErrorKind k);

// Process exit code for the command line front end.
int error_exit_code(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::parse_error, what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace polardisc
