#pragma once

#include <stdexcept>
#include <string>

namespace srs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotUnitNorm : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotTangent : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InvalidRatio : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DomainError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class OmegaOutOfRange : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// The fiber phase is zero: the endpoint is the base point itself.
class DegenerateOmega : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotOnHorizontalSphere : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Raised by solve_general for endpoints that belong to a dedicated solver.
class EndpointOnSpecialLocus : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NoSolutionWithinQmax : public Error {
public:
    using Error::Error;
};

/// Closed-form distance and enumerated minimum disagree. Always a bug.
class InconsistentMinimizer : public Error {
public:
    using Error::Error;
};

class OracleNoCandidate : public Error {
public:
    using Error::Error;
};

}  // namespace srs
