#ifndef QHS_POLYNOMIAL_HPP
#define QHS_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qhs {

/* Dense integer polynomial in t, constant term first.  The leading
 * coefficient is nonzero; the zero polynomial has no coefficients. */
class CharPolynomial {
public:
    CharPolynomial() = default;
    explicit CharPolynomial(std::vector<mpz_class> coefficients);

    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

    /* -1 for the zero polynomial. */
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    mpz_class evaluate(const mpz_class& t) const;

    /*
     * Q(1) where this = (t - 1)^order * Q.  Computed as the Taylor
     * coefficient sum_i C(i, order) p_i, so the caller must already know
     * that (t - 1)^order divides the polynomial.
     */
    mpz_class reduced_value_at_one(std::int64_t order) const;

    friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

} // namespace qhs

#endif
