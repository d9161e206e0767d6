#ifndef QHS_ERROR_HPP
#define QHS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhs {

enum class ErrorKind {
    // caller supplied something outside an operation's domain
    invalid_index,
    invalid_weights,
    integrality,
    pole,
    not_smooth_curve,
    non_integral_divisor,
    malformed_divisor,
    not_a_polynomial,
    coprimality,
    range,
    family_domain,
    overflow,
    // the pipeline disagrees with itself
    cross_check,
    theorem_violation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/* Input errors map to exit status 1, consistency failures to 2. */
bool is_consistency_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return is_consistency_failure(kind_) ? 2 : 1; }

private:
    ErrorKind kind_;
};

} // namespace qhs

#endif
