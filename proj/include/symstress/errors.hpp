#pragma once

#include <stdexcept>
#include <string>

namespace symstress {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Framework data violates a type invariant (duplicate edge, coincident joints, ...).
class InvalidFramework : public Error { using Error::Error; };

/// Framework JSON could not be parsed or does not follow the document schema.
class ParseError : public Error { using Error::Error; };

/// A symmetry operation does not map the framework onto itself.
class NotSymmetric : public Error { using Error::Error; };

/// Two operations of one conjugacy class fix different numbers of joints or bars.
class ClassMismatch : public Error { using Error::Error; };

/// A reduction coefficient is not an integer within tolerance.
class NonIntegerMultiplicity : public Error { using Error::Error; };

class ParityViolation : public Error { using Error::Error; };
class DivisibilityViolation : public Error { using Error::Error; };

/// No transcribed closed form exists for this group / pinning combination.
class UnsupportedGroup : public Error { using Error::Error; };

class CrossCheckFailure : public Error { using Error::Error; };

/// Unpinned joints do not affinely span the plane.
class DegenerateSpan : public Error { using Error::Error; };

class DimensionMismatch : public Error { using Error::Error; };
class UnknownEntry : public Error { using Error::Error; };
class SingularMap : public Error { using Error::Error; };

/// Raised only when planarity is enforced (strict mode).
class NonPlanar : public Error { using Error::Error; };

class DomainError : public Error { using Error::Error; };

}  // namespace symstress
