#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ziegler {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("field mismatch") {}
};

class NotHomogeneous : public Error {
public:
    explicit NotHomogeneous(const std::string& what = "not homogeneous") : Error(what) {}
};

// Raised by the expression parser; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Curve-file schema violation; `path` names the offending field, e.g. "components[1].kind".
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& msg)
        : Error(path + ": " + msg), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class NotMinimal : public Error {
public:
    NotMinimal() : Error("minimize first") {}
};

}  // namespace ziegler
