#pragma once

#include <stdexcept>

namespace factcheck {

// Base class for every error raised by the pipeline.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Transport failed after exhausting retries (connection refused, timeout, 5xx).
class TransportError : public Error {
public:
    using Error::Error;
};

// The server answered with a non-retryable status or an unparseable body.
class ServerError : public Error {
public:
    using Error::Error;
};

// The model returned blank content.
class EmptyCompletion : public Error {
public:
    using Error::Error;
};

// Embedding vectors of inconsistent dimension, or a query that does not
// match the index dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// No verdict label token could be found in the model output. Callers use
// this as the signal to retry generation.
class NoLabelFound : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed knowledge-store or claims input; the message names the line.
class FormatError : public Error {
public:
    using Error::Error;
};

// A knowledge-store file parsed fine but contained zero documents.
class EmptyStore : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Index file carries an unsupported format version.
class VersionMismatch : public Error {
public:
    using Error::Error;
};

} // namespace factcheck
