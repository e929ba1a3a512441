#pragma once

#include <stdexcept>
#include <string>

namespace fqsim {

// Base type for everything this library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define FQSIM_DEFINE_ERROR(name)                          \
    struct name : Error {                                 \
        using Error::Error;                               \
    }

FQSIM_DEFINE_ERROR(NotAPrimePower);   // q is not p^e
FQSIM_DEFINE_ERROR(DivisionByZero);   // inverse of 0, divmod by zero polynomial
FQSIM_DEFINE_ERROR(BothZero);         // gcd(0, 0)
FQSIM_DEFINE_ERROR(NotMonic);         // monic polynomial required
FQSIM_DEFINE_ERROR(ZeroOrConstant);   // nonconstant polynomial required
FQSIM_DEFINE_ERROR(NotSquare);        // square matrix required
FQSIM_DEFINE_ERROR(AmbientMismatch);  // operands live in different ambient spaces
FQSIM_DEFINE_ERROR(NotNested);        // expected U to be a subspace of W
FQSIM_DEFINE_ERROR(InvalidMap);       // domain rows dependent, size mismatch, value out of range
FQSIM_DEFINE_ERROR(NotInDomain);      // applied a map outside its domain
FQSIM_DEFINE_ERROR(SingularMatrix);   // conjugation by a non-invertible matrix
FQSIM_DEFINE_ERROR(InvalidChain);     // invariant factors not monic / nonconstant / divisibility-ordered
FQSIM_DEFINE_ERROR(BadLabel);         // (lambda, I) inconsistent with the stated dimensions
FQSIM_DEFINE_ERROR(BadDimensions);    // dimension arguments out of range
FQSIM_DEFINE_ERROR(BadArguments);     // generic precondition failure on numeric arguments
FQSIM_DEFINE_ERROR(TooLarge);         // enumeration would exceed the work budget
FQSIM_DEFINE_ERROR(ParseFailure);     // malformed polynomial / partition / JSON text

#undef FQSIM_DEFINE_ERROR

}  // namespace fqsim
