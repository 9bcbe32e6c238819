#pragma once

#include <stdexcept>
#include <string>

namespace cliqueval {

enum class ErrorKind {
    invalid_argument,
    parse,
    out_of_range,
    ineligible,
    limit,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(message), _kind(kind)
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

}
