#include "mero/error.hpp"

namespace mero {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case ErrorKind::OrderUnderflow: return "OrderUnderflow";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::BadRadius: return "BadRadius";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::PoleMismatch: return "PoleMismatch";
    case ErrorKind::PoleInDomain: return "PoleInDomain";
    case ErrorKind::RadiusBeyondPole: return "RadiusBeyondPole";
    case ErrorKind::CircleThroughPole: return "CircleThroughPole";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::NoPole: return "NoPole";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace mero
