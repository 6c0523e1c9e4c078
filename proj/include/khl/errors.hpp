#pragma once

#include <stdexcept>
#include <string>

namespace khl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define KHL_ERROR(Name)                                          \
    struct Name : Error {                                        \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

KHL_ERROR(NonFieldRing);
KHL_ERROR(NonHomogeneousEntry);
KHL_ERROR(MixedRings);
KHL_ERROR(WindowRequired);
KHL_ERROR(NonFieldCoefficients);
KHL_ERROR(DegeneracySpanNotSplit);
KHL_ERROR(TruncationUnsound);
KHL_ERROR(NotChainMap);
KHL_ERROR(NotSplitImage);
KHL_ERROR(UnsupportedIdeal);
KHL_ERROR(NotACycle);
KHL_ERROR(LiftFailure);
KHL_ERROR(NotSplitForm);
KHL_ERROR(NotDivisible);
KHL_ERROR(ParseError);
KHL_ERROR(ValidationError);
KHL_ERROR(IoError);
KHL_ERROR(DimensionMismatch);
KHL_ERROR(InvalidArgument);

#undef KHL_ERROR

// Carries the index k of the first square d_k d_{k+1} that fails to vanish.
struct NotAComplex : Error {
    int degree;
    explicit NotAComplex(int k)
        : Error("NotAComplex(" + std::to_string(k) + ")"), degree(k) {}
};

}  // namespace khl
