#include "qhs/realization.hpp"

#include <numeric>
#include <string>

#include "qhs/error.hpp"
#include "qhs/primes.hpp"

namespace qhs {

namespace {

using Partition = std::vector<int>;

void partitions_into(int n, int max_part, Partition& prefix, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

/* Partitions of n, parts descending, in decreasing lexicographic order. */
std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    Partition prefix;
    partitions_into(n, n, prefix, out);
    return out;
}

} // namespace

FamilyMember family_member(std::int64_t p)
{
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw Error(ErrorKind::family_domain, std::to_string(p) + " is not prime");
    if (p % 4 != 3)
        throw Error(ErrorKind::family_domain,
                    std::to_string(p) + " is not of the form 4l - 1, so (p+1)/4 is not an integer");

    const std::int64_t l = (p + 1) / 4;
    FamilyMember m{p, l, WeightSystem({1, l, (p - 1) / 2}, p)};
    if (std::gcd(l, 2 * l - 1) != 1)
        throw Error(ErrorKind::cross_check, "gcd((p+1)/4, (p-1)/2) != 1");
    if (genus(m.system) != 1)
        throw Error(ErrorKind::cross_check, "family member for p = " + std::to_string(p) + " is not genus one");
    return m;
}

std::int64_t PrimePowerSummand::order() const
{
    std::int64_t q = 1;
    for (int i = 0; i < exponent; ++i)
        q *= prime;
    return q;
}

mpz_class SmaleManifold::h2_order() const
{
    mpz_class n = 1;
    for (const auto& s : summands)
        n *= mpz_class(static_cast<long>(s.order())) * static_cast<long>(s.order());
    return n;
}

std::vector<std::int64_t> SmaleManifold::elementary_divisors() const
{
    std::vector<std::int64_t> out;
    for (const auto& s : summands) {
        out.push_back(s.order());
        out.push_back(s.order());
    }
    return out;
}

std::string SmaleManifold::name() const
{
    if (summands.empty())
        return "S^5";
    std::string s;
    for (const auto& part : summands) {
        if (!s.empty())
            s += "#";
        s += "M_" + std::to_string(part.order());
    }
    return s;
}

std::vector<SmaleManifold> smale_decompositions(std::int64_t k)
{
    if (k < 1)
        throw Error(ErrorKind::range, "k must be positive, got " + std::to_string(k));

    std::vector<SmaleManifold> out{SmaleManifold{}};
    for (const auto& [p, e] : factorize(k)) {
        std::vector<SmaleManifold> next;
        for (const auto& prefix : out) {
            for (const auto& parts : partitions(e)) {
                SmaleManifold m = prefix;
                for (int s : parts)
                    m.summands.push_back({p, s});
                next.push_back(std::move(m));
            }
        }
        out = std::move(next);
    }
    return out;
}

bool is_unique_realization(std::int64_t k)
{
    if (k < 2)
        throw Error(ErrorKind::range, "k must be an integer > 1, got " + std::to_string(k));
    return is_squarefree(k);
}

std::int64_t choose_family_prime(std::int64_t k, std::optional<std::int64_t> prime)
{
    if (prime) {
        family_member(*prime);
        if (k % *prime == 0)
            throw Error(ErrorKind::coprimality,
                        "prime " + std::to_string(*prime) + " divides k = " + std::to_string(k));
        return *prime;
    }
    for (std::int64_t p = 3;; p += 4)
        if (is_prime(static_cast<std::uint64_t>(p)) && k % p != 0)
            return p;
}

RealizationCertificate realize(std::int64_t k, std::optional<std::int64_t> prime, const CoverOptions& opts)
{
    if (k < 2)
        throw Error(ErrorKind::range, "k must be an integer > 1, got " + std::to_string(k));

    FamilyMember family = family_member(choose_family_prime(k, prime));
    CoverOptions cover_opts = opts;
    cover_opts.diagnostic = false;
    CoverLink cover = build_cover(family.system, k, cover_opts);

    const mpz_class k2 = mpz_class(static_cast<long>(k)) * static_cast<long>(k);
    if (cover.invariants.multiplicity_of_unity != 0 || !cover.invariants.delta_at_one ||
        *cover.invariants.delta_at_one != k2)
        throw Error(ErrorKind::theorem_violation, "cover does not have |H2| = k^2");

    auto candidates = smale_decompositions(k);
    for (const auto& m : candidates)
        if (m.h2_order() != k2)
            throw Error(ErrorKind::cross_check, "candidate " + m.name() + " has the wrong H2 order");
    if ((candidates.size() == 1) != is_squarefree(k))
        throw Error(ErrorKind::cross_check, "uniqueness disagrees with squarefreeness of k");

    mpz_class h2 = *cover.invariants.delta_at_one;
    return {k, std::move(family), std::move(cover), std::move(h2), std::move(candidates)};
}

std::vector<WeightSystem> search_weight_systems(std::int64_t target_genus, std::int64_t max_degree)
{
    std::vector<WeightSystem> out;
    if (target_genus < 0)
        return out;
    for (std::int64_t d = 1; d <= max_degree; ++d) {
        for (std::int64_t w1 = 1; w1 <= d; ++w1) {
            for (std::int64_t w2 = w1; w2 <= d; ++w2) {
                for (std::int64_t w3 = w2; w3 <= d; ++w3) {
                    if (target_genus > 0 && w1 + w2 + w3 > d)
                        break;
                    WeightSystem ws({w1, w2, w3}, d);
                    if (try_genus(ws) == target_genus)
                        out.push_back(std::move(ws));
                }
            }
        }
    }
    return out;
}

} // namespace qhs
