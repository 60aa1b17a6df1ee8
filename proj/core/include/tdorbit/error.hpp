#pragma once

#include <stdexcept>
#include <string>

namespace tdorbit {

// Every failure raised by the library derives from Error; the concrete type
// names the violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TDORBIT_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

TDORBIT_DEFINE_ERROR(NotPrime);
TDORBIT_DEFINE_ERROR(ModulusMismatch);
TDORBIT_DEFINE_ERROR(DivisionByZero);
TDORBIT_DEFINE_ERROR(DimensionMismatch);
TDORBIT_DEFINE_ERROR(ShapeMismatch);
TDORBIT_DEFINE_ERROR(LengthMismatch);
TDORBIT_DEFINE_ERROR(RationalityViolation);
TDORBIT_DEFINE_ERROR(Overflow);
TDORBIT_DEFINE_ERROR(BudgetExceeded);
TDORBIT_DEFINE_ERROR(OutOfRange);
TDORBIT_DEFINE_ERROR(ParityViolation);
TDORBIT_DEFINE_ERROR(EvenSegment);
TDORBIT_DEFINE_ERROR(ZeroInteriorY);
TDORBIT_DEFINE_ERROR(NotComparable);
TDORBIT_DEFINE_ERROR(TypeMismatch);
TDORBIT_DEFINE_ERROR(NotBasicOrbit);
TDORBIT_DEFINE_ERROR(InvalidStabCharacter);
TDORBIT_DEFINE_ERROR(SlotCountMismatch);

#undef TDORBIT_DEFINE_ERROR

}  // namespace tdorbit
