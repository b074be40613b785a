#pragma once

#include <stdexcept>
#include <string>

namespace glp {

/// Base of every error raised by the library. Catch this to handle all of them.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GLP_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& what) : Error(what) {} \
    }

GLP_DEFINE_ERROR(InvalidPrime);
GLP_DEFINE_ERROR(InvalidArgument);
GLP_DEFINE_ERROR(FactorizationIncomplete);
GLP_DEFINE_ERROR(InvalidPolynomial);
GLP_DEFINE_ERROR(InvalidPolygon);
GLP_DEFINE_ERROR(InvalidMultipliers);
GLP_DEFINE_ERROR(PreconditionViolated);
GLP_DEFINE_ERROR(OutOfScheduledRange);
GLP_DEFINE_ERROR(DegreeBoundExceeded);
GLP_DEFINE_ERROR(FixtureError);

#undef GLP_DEFINE_ERROR

}  // namespace glp
