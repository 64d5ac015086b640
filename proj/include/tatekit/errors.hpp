#pragma once

#include <stdexcept>
#include <string>

namespace tatekit {

// Every failure raised by the library derives from Error and carries a
// stable kind() name used by the CLI and in JSON error payloads.
class Error : public std::runtime_error {
public:
    Error(const char* kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    const char* kind() const noexcept { return kind_; }

private:
    const char* kind_;
};

#define TATEKIT_ERROR(Name)                                                  \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

TATEKIT_ERROR(InvalidSpec);
TATEKIT_ERROR(SpecMismatch);
TATEKIT_ERROR(ArityMismatch);
TATEKIT_ERROR(DivisionByZero);
TATEKIT_ERROR(EmptyPrecision);
TATEKIT_ERROR(NonUnitLeading);
TATEKIT_ERROR(ZeroSeries);
TATEKIT_ERROR(IndeterminateLeading);
TATEKIT_ERROR(NotIntegral);
TATEKIT_ERROR(NotALattice);
TATEKIT_ERROR(NotContained);
TATEKIT_ERROR(NotInGeneratedModel);
TATEKIT_ERROR(PreconditionViolated);
TATEKIT_ERROR(NotIrreducible);
TATEKIT_ERROR(NotStandardForm);
TATEKIT_ERROR(NotCoprime);
TATEKIT_ERROR(SchemaError);
TATEKIT_ERROR(UnknownSuite);
TATEKIT_ERROR(ArityUnsupported);

#undef TATEKIT_ERROR

}  // namespace tatekit
