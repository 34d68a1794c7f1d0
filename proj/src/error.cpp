#include "dualpolar/error.hpp"

namespace dualpolar {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotQuadraticExtension: return "NotQuadraticExtension";
    case Errc::BadParameters: return "BadParameters";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WittIndexMismatch: return "WittIndexMismatch";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::NotDistanceRegular: return "NotDistanceRegular";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ThetaMismatch: return "ThetaMismatch";
    case Errc::EigenvalueCollision: return "EigenvalueCollision";
    case Errc::NotAnEigenvalue: return "NotAnEigenvalue";
    case Errc::FiltrationMismatch: return "FiltrationMismatch";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::DecompositionMismatch: return "DecompositionMismatch";
    case Errc::FrameConstantMismatch: return "FrameConstantMismatch";
    case Errc::TightFrameViolation: return "TightFrameViolation";
    case Errc::NotInV1: return "NotInV1";
    case Errc::BadOperands: return "BadOperands";
    case Errc::DiameterTooSmall: return "DiameterTooSmall";
    case Errc::NortonMismatch: return "NortonMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace dualpolar
