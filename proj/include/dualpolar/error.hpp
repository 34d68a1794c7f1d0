#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualpolar {

enum class Errc {
    NotPrime,
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    NotQuadraticExtension,
    BadParameters,
    DimensionMismatch,
    WittIndexMismatch,
    CountMismatch,
    NotDistanceRegular,
    IndexOutOfRange,
    ThetaMismatch,
    EigenvalueCollision,
    NotAnEigenvalue,
    FiltrationMismatch,
    IdentityViolation,
    DecompositionMismatch,
    FrameConstantMismatch,
    TightFrameViolation,
    NotInV1,
    BadOperands,
    DiameterTooSmall,
    NortonMismatch,
    Overflow,
    BadInput,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace dualpolar
