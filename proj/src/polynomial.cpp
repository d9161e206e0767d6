#include "qhs/polynomial.hpp"

#include <utility>

namespace qhs {

CharPolynomial::CharPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients))
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

mpz_class CharPolynomial::evaluate(const mpz_class& t) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

mpz_class CharPolynomial::reduced_value_at_one(std::int64_t order) const
{
    if (order <= 0)
        return evaluate(1);
    mpz_class acc = 0;
    mpz_class binom = 1; // C(i, order), starting at i = order
    for (std::int64_t i = order; i <= degree(); ++i) {
        if (i > order) {
            binom *= static_cast<unsigned long>(i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(i - order));
        }
        mpz_addmul(acc.get_mpz_t(), binom.get_mpz_t(), coeffs_[static_cast<std::size_t>(i)].get_mpz_t());
    }
    return acc;
}

} // namespace qhs
