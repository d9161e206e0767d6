#ifndef QHS_VERIFY_HPP
#define QHS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qhs/weights.hpp"

namespace qhs {

/*
 * Base systems used for cross-validation: 1 <= w1 <= w2 <= w3 <= d <=
 * max_degree with a defined genus and an integral Milnor-Orlik divisor.
 */
std::vector<WeightSystem> regression_grid(std::int64_t max_degree);

struct VerifyBounds {
    std::int64_t max_degree = 40;
    std::int64_t max_k = 12;
    bool oracle = true;
};

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> sample_failures;

    bool ok() const noexcept { return failed == 0; }
};

/*
 * Runs genus/Betti duality, oracle agreement of Delta(t) and Delta(1), and
 * for every coprime 2 <= k <= max_k the two-path cover identity, the order
 * law |H2| = k^(2g) and b2 = 0.
 */
std::vector<PropertyResult> verify_grid(const VerifyBounds& bounds);

} // namespace qhs

#endif
