#pragma once

#include <stdexcept>
#include <string>

namespace bcw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A (p, q) or (p, r) input that the algorithm does not accept.
class InvalidPair : public Error {
  public:
    using Error::Error;
};

/// The output length (p-1)(q-1)+1 exceeds the configured size cap.
class OutputTooLarge : public InvalidPair {
  public:
    using InvalidPair::InvalidPair;
};

/// Internal addition produced +2 or -2. For valid BCW inputs this cannot
/// happen, so seeing it means a defect or a corrupted input.
class AdditionOverflow : public Error {
  public:
    using Error::Error;
};

/// A word operation was called outside its domain (empty base, k > len).
class WordDomainError : public Error {
  public:
    using Error::Error;
};

/// assemble() was handed a table built for another (p, r).
class TableMismatch : public Error {
  public:
    using Error::Error;
};

/// Polynomial division left a nonzero remainder.
class InexactDivision : public Error {
  public:
    using Error::Error;
};

/// An oracle produced a coefficient outside {-1, 0, +1}.
class AlphabetViolation : public Error {
  public:
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class ArithmeticOverflow : public Error {
  public:
    using Error::Error;
};

/// Malformed table file or dense/sparse text.
class FormatError : public Error {
  public:
    using Error::Error;
};

} // namespace bcw
