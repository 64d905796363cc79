#ifndef HARDY_ERRORS_HPP
#define HARDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardy {

// Base class for all precondition / domain failures thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HARDY_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                         \
        explicit Name(const std::string& w) : Error(#Name ": " + w) {} \
    }

HARDY_DEFINE_ERROR(NonUpperHalfZero);     // zero not strictly in the upper half-plane
HARDY_DEFINE_ERROR(NegativeExponentialMass);
HARDY_DEFINE_ERROR(NonUnimodularRotation);
HARDY_DEFINE_ERROR(PoleHit);              // evaluation at (or too near) a pole
HARDY_DEFINE_ERROR(TruncationNotConverged); // generator window exhausted before tail bound met
HARDY_DEFINE_ERROR(ConstantFunction);     // operation needs a non-constant inner function
HARDY_DEFINE_ERROR(EmptyMeasure);
HARDY_DEFINE_ERROR(OnSupport);            // Cauchy integral evaluated on an atom
HARDY_DEFINE_ERROR(InfiniteMassUnsupported);
HARDY_DEFINE_ERROR(ZeroDegree);
HARDY_DEFINE_ERROR(SharedZero);           // rational pair must have disjoint zero sets
HARDY_DEFINE_ERROR(NotMonotone);
HARDY_DEFINE_ERROR(TailDivergent);        // input not summable against the Poisson weight
HARDY_DEFINE_ERROR(TailNotSettled);       // tail oscillation too large to read off limits
HARDY_DEFINE_ERROR(WindowExhausted);
HARDY_DEFINE_ERROR(NotApplicable);
HARDY_DEFINE_ERROR(SchemaError);          // malformed JSON/CSV input
HARDY_DEFINE_ERROR(NumericalUnderflow);
HARDY_DEFINE_ERROR(ZeroOnRealAxis);       // Hermite-Biehler data must avoid the real axis

#undef HARDY_DEFINE_ERROR

} // namespace hardy

#endif
