#ifndef QHS_ORACLE_HPP
#define QHS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <utility>

#include <gmpxx.h>

#include "qhs/divisor.hpp"
#include "qhs/polynomial.hpp"

// Independent verification paths.  Nothing in here touches OrlikDivisor
// multiplication or the char_poly_from_divisor expansion.

namespace qhs::oracle {

/*
 * prod_j (t^j - 1)^{c_j} by repeated multiplication with single factors
 * t^j - 1 followed by one exact division per negative factor.  Throws like
 * char_poly_from_divisor.
 */
CharPolynomial oracle_expand(const OrlikDivisor& div);

/* Reduced fraction m/n in [0,1) naming the root of unity exp(2 pi i m/n). */
using Angle = std::pair<std::int64_t, std::int64_t>;

Angle make_angle(std::int64_t num, std::int64_t den);
Angle add_angles(const Angle& a, const Angle& b);

/*
 * Roots of unity with rational (possibly negative) multiplicities.  A
 * divisor sum c_j Lambda_j maps to the multiset in which each j-th root of
 * unity carries weight c_j; multiplication in the group ring is the
 * convolution of angles.
 */
class UnityRootMultiset {
public:
    using Weights = std::map<Angle, mpq_class>;

    UnityRootMultiset() = default;

    /* Roots of t^j - 1, each with multiplicity one. */
    static UnityRootMultiset of_binomial(std::int64_t j);
    static UnityRootMultiset of_divisor(const OrlikDivisor& div);

    const Weights& weights() const noexcept { return weights_; }

    /* Total multiplicity, the degree of the underlying polynomial. */
    mpq_class total() const;

    void add(const Angle& a, const mpq_class& w);
    UnityRootMultiset& operator+=(const UnityRootMultiset& rhs);
    UnityRootMultiset scaled(const mpq_class& q) const;

    friend UnityRootMultiset convolve(const UnityRootMultiset& a, const UnityRootMultiset& b);
    friend bool operator==(const UnityRootMultiset&, const UnityRootMultiset&) = default;

private:
    Weights weights_;
};

} // namespace qhs::oracle

#endif
