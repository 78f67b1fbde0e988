#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burst {

// Domain errors: the request is well formed but the mathematics refuses it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad moduli, unparsable files, bad CLI values.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FieldMismatch : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct NullspaceDimension : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroScalar : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotSystematic : Error { using Error::Error; };
struct NotGood : Error { using Error::Error; };
struct NotBinary : Error { using Error::Error; };
struct LimitExceeded : Error { using Error::Error; };
struct SizeCapExceeded : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct BurstTooLong : Error { using Error::Error; };
struct NotABurst : Error { using Error::Error; };
struct InconsistentWord : Error { using Error::Error; };

struct InvalidModulus : InputError { using InputError::InputError; };

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A good generator produced a singular information-set submatrix. Library
// constructions cannot trigger this; it signals a construction bug.
struct InternalSingular : std::logic_error { using std::logic_error::logic_error; };

} // namespace burst
