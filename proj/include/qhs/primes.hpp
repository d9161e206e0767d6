#ifndef QHS_PRIMES_HPP
#define QHS_PRIMES_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qhs {

/* Deterministic for all 64-bit inputs: trial division below 10^6, strong
 * probable-prime tests to the first twelve prime bases above. */
bool is_prime(std::uint64_t n);

/* Primes p <= limit with p = 3 mod 4, ascending. */
std::vector<std::int64_t> primes_4l_minus_1(std::int64_t limit);

/* (p, e) pairs of n >= 1, primes ascending. */
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_squarefree(std::int64_t n);

} // namespace qhs

#endif
