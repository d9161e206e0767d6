#include "qhs/primes.hpp"

#include <array>

namespace qhs {

namespace {

constexpr std::uint64_t trial_division_bound = 1000000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base)
{
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod(base, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n < trial_division_bound) {
        for (std::uint64_t p = 2; p * p <= n; ++p)
            if (n % p == 0)
                return false;
        return true;
    }
    // sufficient for n < 3.3e24
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0)
            return false;
        if (!strong_probable_prime(n, b))
            return false;
    }
    return true;
}

std::vector<std::int64_t> primes_4l_minus_1(std::int64_t limit)
{
    std::vector<std::int64_t> out;
    if (limit < 3)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        if (p % 4 == 3)
            out.push_back(p);
        for (std::int64_t m = p * p; m <= limit; m += p)
            composite[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(std::int64_t n)
{
    for (const auto& [p, e] : factorize(n))
        if (e > 1)
            return false;
    return true;
}

} // namespace qhs
