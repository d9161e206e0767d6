#ifndef QHS_COVER_HPP
#define QHS_COVER_HPP

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "qhs/divisor.hpp"
#include "qhs/milnor_orlik.hpp"
#include "qhs/weights.hpp"

namespace qhs {

/* (w; d) -> ((d, k w1, k w2, k w3); k d), the link of z0^k + f3. */
WeightSystem cover_weights(const WeightSystem& base, std::int64_t k);

/* (Lambda_k - 1) * base_div */
OrlikDivisor cover_divisor(const OrlikDivisor& base_div, std::int64_t k);

struct CoverOptions {
    /* Compute only the (Lambda_k - 1) * div(base) path. */
    bool skip_direct_path = false;
    /* Above this k*d the direct 4-variable path is skipped automatically. */
    std::int64_t direct_path_max_degree = 10000;
    /* Accept gcd(d, k) > 1 and report without asserting anything. */
    bool diagnostic = false;
    LinkOptions link;
};

struct CoverLink {
    WeightSystem base;
    std::int64_t k;
    WeightSystem cover_system;
    LinkInvariants base_invariants;
    LinkInvariants invariants;
    /* Empty when the direct path was not run. */
    std::optional<bool> paths_agree;
    /* k^(2g); empty in diagnostic mode. */
    std::optional<mpz_class> expected_h2_order;
    bool diagnostic = false;
};

/*
 * The k-fold branched cover over the base link.  The cover divisor is
 * computed from the base and, unless skipped, directly from the cover
 * weights; a mismatch, b2 != 0 or Delta(1) != k^(2g) throws
 * theorem_violation.
 */
CoverLink build_cover(const WeightSystem& base, std::int64_t k, const CoverOptions& opts = {});

} // namespace qhs

#endif
