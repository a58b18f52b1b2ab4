#pragma once

#include <stdexcept>
#include <string>

namespace holant {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero in Q(z8)") {}
};

/// The support of a signature is not an affine subspace of Z_2^n.
class NotAffine : public Error {
public:
    explicit NotAffine(const std::string& what = "support is not affine") : Error(what) {}
};

class EmptySupport : public Error {
public:
    EmptySupport() : Error("signature is identically zero") {}
};

/// Some support-value ratio is not a power of alpha, so no exponent
/// normal form exists.
class NotUnimodular : public Error {
public:
    explicit NotUnimodular(const std::string& what = "value ratio is not a power of alpha")
        : Error(what) {}
};

class MalformedGrid : public Error {
public:
    explicit MalformedGrid(const std::string& what) : Error(what) {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

/// A solver was handed a grid whose signatures are outside its family.
class NotInClass : public Error {
public:
    explicit NotInClass(const std::string& what) : Error(what) {}
};

class NotRealValued : public Error {
public:
    explicit NotRealValued(const std::string& what) : Error(what) {}
};

class BundleViolation : public Error {
public:
    explicit BundleViolation(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

class DuplicateEntry : public ParseError {
public:
    DuplicateEntry(int line, const std::string& bits)
        : ParseError(line, "duplicate support entry " + bits) {}
};

class ValueOutsideRing : public ParseError {
public:
    ValueOutsideRing(int line, const std::string& what)
        : ParseError(line, "value outside Q(z8): " + what) {}
    explicit ValueOutsideRing(const std::string& what)
        : ParseError("value outside Q(z8): " + what) {}
};

class UnknownSignature : public Error {
public:
    explicit UnknownSignature(const std::string& name)
        : Error("unknown signature name: " + name) {}
};

}  // namespace holant
