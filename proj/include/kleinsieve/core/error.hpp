#pragma once

#include <stdexcept>
#include <string>

namespace kleinsieve {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid family/rank combination or unparsable type string.
class InvalidType : public Error {
public:
    using Error::Error;
};

/// Malformed data document, schema violation, or a stated value that
/// disagrees with the recomputed one.
class DataError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Weyl group enumeration would exceed the configured element cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace kleinsieve
