#pragma once

#include <stdexcept>
#include <string>

namespace suborbit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClosureCapExceeded : Error {
    using Error::Error;
};
struct NotASubgroup : Error {
    using Error::Error;
};
struct NotTransitive : Error {
    using Error::Error;
};
struct NotRegular : Error {
    using Error::Error;
};
struct NotProper : Error {
    using Error::Error;
};
struct NotClosed : Error {
    using Error::Error;
};
struct BadConstructorInput : Error {
    using Error::Error;
};
struct BadTauInput : Error {
    using Error::Error;
};
struct OrderTooLarge : Error {
    using Error::Error;
};
struct PreconditionRatio : Error {
    using Error::Error;
};
struct NotExtraspecialShape : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(int line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line(line) {}
    int line;
};
struct ValidationError : Error {
    ValidationError(const std::string& name, const std::string& reason)
        : Error("invalid entry '" + name + "': " + reason), name(name) {}
    std::string name;
};

}  // namespace suborbit
