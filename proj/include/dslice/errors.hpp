#pragma once

#include <stdexcept>
#include <string>

namespace dslice {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareMatrix : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

struct InvalidSeifert : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct InvalidAlexander : Error { using Error::Error; };

struct NotPrimePower : Error { using Error::Error; };
struct DegenerateCover : Error { using Error::Error; };
struct MismatchedCover : Error { using Error::Error; };

struct GroupTooLarge : Error { using Error::Error; };

struct BadFraction : Error { using Error::Error; };
struct ElementOutOfRange : Error { using Error::Error; };
struct MalformedRecord : Error { using Error::Error; };
struct MalformedInput : Error { using Error::Error; };

// Internal consistency failure: a build-time invariant did not hold.
struct InternalCheck : Error { using Error::Error; };

}  // namespace dslice
