#ifndef QHS_MILNOR_ORLIK_HPP
#define QHS_MILNOR_ORLIK_HPP

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "qhs/divisor.hpp"
#include "qhs/polynomial.hpp"
#include "qhs/weights.hpp"

namespace qhs {

/* Lambda_u / v - 1, one factor of the Milnor-Orlik product. */
OrlikDivisor linear_factor(const ReducedRatio& r);

/*
 * div Delta = prod_i (Lambda_{u_i} / v_i - 1), fully expanded.  Throws
 * non_integral_divisor when the expansion does not come out integral, which
 * happens exactly when the weights admit no isolated singularity.
 */
OrlikDivisor milnor_orlik_divisor(const WeightSystem& ws);

/* Number of (t - 1) factors of Delta: b1 for 3-variable links, b2 for the
 * 4-variable covers. */
std::int64_t betti_from_divisor(const OrlikDivisor& div);

/* prod_j (t^j - 1)^{c_j} via closed-form binomial expansion of the positive
 * part and one exact long division by the negative part. */
CharPolynomial char_poly_from_divisor(const OrlikDivisor& div);

struct LinkOptions {
    /* Delta(t) is expanded only up to this degree; above it char_poly is
     * left empty. */
    std::int64_t max_poly_degree = 100000;
};

struct LinkInvariants {
    WeightSystem system;
    OrlikDivisor divisor;
    std::int64_t multiplicity_of_unity = 0;
    std::optional<CharPolynomial> char_poly;
    std::optional<mpz_class> delta_at_one;
    std::optional<std::int64_t> genus;

    /* "b1" for three variables, "b2" for four, "b{n-2}" otherwise. */
    std::string betti_label() const;
};

LinkInvariants link_invariants(const WeightSystem& ws, const LinkOptions& opts = {});

/* Assemble invariants for a divisor already known to belong to `ws`. */
LinkInvariants link_invariants_from_divisor(const WeightSystem& ws, OrlikDivisor div,
                                            const LinkOptions& opts = {});

} // namespace qhs

#endif
