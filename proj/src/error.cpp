#include "qhs/error.hpp"

namespace qhs {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_index: return "invalid-index";
    case ErrorKind::invalid_weights: return "invalid-weights";
    case ErrorKind::integrality: return "integrality";
    case ErrorKind::pole: return "pole";
    case ErrorKind::not_smooth_curve: return "not-a-smooth-curve";
    case ErrorKind::non_integral_divisor: return "non-integral-divisor";
    case ErrorKind::malformed_divisor: return "malformed-divisor";
    case ErrorKind::not_a_polynomial: return "not-a-polynomial";
    case ErrorKind::coprimality: return "coprimality";
    case ErrorKind::range: return "range";
    case ErrorKind::family_domain: return "family-domain";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::cross_check: return "cross-check-failure";
    case ErrorKind::theorem_violation: return "theorem-violation";
    }
    return "unknown";
}

bool is_consistency_failure(ErrorKind kind) noexcept
{
    return kind == ErrorKind::cross_check || kind == ErrorKind::theorem_violation;
}

} // namespace qhs
