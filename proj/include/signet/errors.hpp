#pragma once

#include <stdexcept>

namespace signet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Natural subtraction with a < b.
class Underflow : public Error {
public:
    using Error::Error;
};

/// Division or remainder with a zero divisor.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// mod_inverse(e, m) with gcd(e, m) != 1.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// Modular arithmetic with modulus <= 1.
class InvalidModulus : public Error {
public:
    using Error::Error;
};

/// Rejected text in a numeric codec (empty input, bad digit).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Signing with a modulus too small to hold a 160-bit digest integer.
class ModulusTooSmall : public Error {
public:
    using Error::Error;
};

/// Verifying a signature value s >= n.
class SignatureOutOfRange : public Error {
public:
    using Error::Error;
};

/// Key or signature file that does not match the expected line format.
class KeyFormatError : public Error {
public:
    using Error::Error;
};

/// Unreadable or unwritable file.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace signet
