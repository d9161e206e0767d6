#ifndef QHS_REALIZATION_HPP
#define QHS_REALIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qhs/cover.hpp"
#include "qhs/weights.hpp"

namespace qhs {

/* f_p = z1^p + z2^2 z3 + z3^2 z1, weights (1, (p+1)/4, (p-1)/2), degree p,
 * for primes p = 4l - 1.  Every member cuts out a genus one curve. */
struct FamilyMember {
    std::int64_t p;
    std::int64_t l;
    WeightSystem system;
};

/* Throws family_domain unless p is a prime congruent to 3 mod 4. */
FamilyMember family_member(std::int64_t p);

/* One connected summand M_{q^s}: H2 = Z_{q^s} + Z_{q^s}. */
struct PrimePowerSummand {
    std::int64_t prime;
    int exponent;

    std::int64_t order() const;
    friend bool operator==(const PrimePowerSummand&, const PrimePowerSummand&) = default;
};

/*
 * M_{k1} # ... # M_{ks}, spin, so i(M) = 0.  Summands are kept grouped by
 * prime (ascending) with exponents descending; the empty list is S^5.
 */
struct SmaleManifold {
    std::vector<PrimePowerSummand> summands;

    static constexpr int i_invariant = 0;

    mpz_class h2_order() const;
    /* Each summand order twice, in summand order. */
    std::vector<std::int64_t> elementary_divisors() const;
    /* "M_2#M_3", or "S^5" when empty. */
    std::string name() const;

    friend bool operator==(const SmaleManifold&, const SmaleManifold&) = default;
};

/*
 * All spin rational homology spheres with |H2| = k^2: one candidate per
 * choice of a partition of e for every p^e || k.  Ordered with the first
 * prime most significant and partitions in decreasing lexicographic order,
 * so k = 8 gives M_8, M_4#M_2, M_2#M_2#M_2.
 */
std::vector<SmaleManifold> smale_decompositions(std::int64_t k);

bool is_unique_realization(std::int64_t k);

struct RealizationCertificate {
    std::int64_t k;
    FamilyMember family;
    CoverLink cover;
    mpz_class h2_order;
    std::vector<SmaleManifold> candidates;

    bool unique() const noexcept { return candidates.size() == 1; }
    bool group_undetermined() const noexcept { return !unique(); }
};

/* Smallest family prime not dividing k, or `prime` when given. */
std::int64_t choose_family_prime(std::int64_t k, std::optional<std::int64_t> prime = std::nullopt);

RealizationCertificate realize(std::int64_t k, std::optional<std::int64_t> prime = std::nullopt,
                               const CoverOptions& opts = {});

/*
 * 3-variable systems w1 <= w2 <= w3 <= d <= max_degree whose genus formula
 * is a non-negative integer equal to target_genus.  Ordered by degree, then
 * weights lexicographically.
 */
std::vector<WeightSystem> search_weight_systems(std::int64_t target_genus, std::int64_t max_degree);

} // namespace qhs

#endif
