#include "qhs/divisor.hpp"

#include <numeric>
#include <set>
#include <string>

#include "qhs/error.hpp"

namespace qhs {

Index index_gcd(Index a, Index b)
{
    return std::gcd(a, b);
}

Index index_lcm(Index a, Index b)
{
    const Index g = std::gcd(a, b);
    Index out = 0;
    if (__builtin_mul_overflow(a / g, b, &out))
        throw Error(ErrorKind::overflow,
                    "lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") exceeds 64 bits");
    return out;
}

OrlikDivisor::OrlikDivisor(std::initializer_list<std::pair<const Index, mpq_class>> terms)
{
    for (const auto& [j, c] : terms)
        add_term(j, c);
    prune();
}

OrlikDivisor::OrlikDivisor(Terms terms)
{
    for (auto& [j, c] : terms)
        add_term(j, c);
    prune();
}

OrlikDivisor OrlikDivisor::one()
{
    return lambda(1);
}

mpq_class OrlikDivisor::coefficient(Index j) const
{
    auto it = terms_.find(j);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void OrlikDivisor::add_term(Index j, const mpq_class& c)
{
    if (j < 1)
        throw Error(ErrorKind::invalid_index, "divisor index must be >= 1, got " + std::to_string(j));
    mpq_class v = c;
    v.canonicalize();
    terms_[j] += v;
}

void OrlikDivisor::prune()
{
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

OrlikDivisor& OrlikDivisor::operator+=(const OrlikDivisor& rhs)
{
    for (const auto& [j, c] : rhs.terms_)
        terms_[j] += c;
    prune();
    return *this;
}

OrlikDivisor& OrlikDivisor::operator-=(const OrlikDivisor& rhs)
{
    for (const auto& [j, c] : rhs.terms_)
        terms_[j] -= c;
    prune();
    return *this;
}

OrlikDivisor operator*(const OrlikDivisor& a, const OrlikDivisor& b)
{
    OrlikDivisor out;
    for (const auto& [i, ci] : a.terms_) {
        for (const auto& [j, cj] : b.terms_) {
            const Index g = index_gcd(i, j);
            out.terms_[index_lcm(i, j)] += ci * cj * g;
        }
    }
    out.prune();
    return out;
}

OrlikDivisor& OrlikDivisor::operator*=(const OrlikDivisor& rhs)
{
    *this = *this * rhs;
    return *this;
}

OrlikDivisor operator-(const OrlikDivisor& a)
{
    OrlikDivisor out = a;
    for (auto& [j, c] : out.terms_)
        c = -c;
    return out;
}

OrlikDivisor lambda(Index j)
{
    if (j < 1)
        throw Error(ErrorKind::invalid_index, "Lambda_j needs j >= 1, got " + std::to_string(j));
    return OrlikDivisor{{j, mpq_class(1)}};
}

OrlikDivisor add(const OrlikDivisor& a, const OrlikDivisor& b)
{
    return a + b;
}

OrlikDivisor mul(const OrlikDivisor& a, const OrlikDivisor& b)
{
    return a * b;
}

OrlikDivisor scale(const OrlikDivisor& a, const mpq_class& q)
{
    OrlikDivisor::Terms terms;
    for (const auto& [j, c] : a.terms())
        terms.emplace(j, c * q);
    return OrlikDivisor(std::move(terms));
}

mpq_class coefficient_sum(const OrlikDivisor& a)
{
    mpq_class s = 0;
    for (const auto& [j, c] : a.terms())
        s += c;
    return s;
}

bool is_integral(const OrlikDivisor& a)
{
    for (const auto& [j, c] : a.terms())
        if (c.get_den() != 1)
            return false;
    return true;
}

mpq_class cyclotomic_exponent(const OrlikDivisor& a, Index m)
{
    if (m < 1)
        throw Error(ErrorKind::invalid_index, "cyclotomic index must be >= 1, got " + std::to_string(m));
    mpq_class e = 0;
    for (const auto& [j, c] : a.terms())
        if (j % m == 0)
            e += c;
    return e;
}

bool is_polynomial_valued(const OrlikDivisor& a)
{
    if (!is_integral(a))
        return false;
    // only divisors of some support index can carry a nonzero exponent
    std::set<Index> ms;
    for (const auto& [j, c] : a.terms())
        for (Index m = 1; m * m <= j; ++m)
            if (j % m == 0) {
                ms.insert(m);
                ms.insert(j / m);
            }
    for (auto m : ms)
        if (sgn(cyclotomic_exponent(a, m)) < 0)
            return false;
    return true;
}

mpq_class polynomial_degree(const OrlikDivisor& a)
{
    mpq_class s = 0;
    for (const auto& [j, c] : a.terms())
        s += c * mpz_class(static_cast<long>(j));
    return s;
}

UnityValue evaluate_at_one_reduced(const OrlikDivisor& a)
{
    if (!is_integral(a))
        throw Error(ErrorKind::integrality, "evaluation at t = 1 needs integral coefficients");

    const mpq_class sum = coefficient_sum(a);
    if (sum < 0)
        throw Error(ErrorKind::pole,
                    "product has a pole of order " + mpz_class(-sum.get_num()).get_str() + " at t = 1");
    if (!sum.get_num().fits_slong_p())
        throw Error(ErrorKind::overflow, "zero order at t = 1 exceeds 64 bits");

    mpz_class num = 1, den = 1;
    for (const auto& [j, c] : a.terms()) {
        const mpz_class e = abs(c.get_num());
        if (!e.fits_ulong_p())
            throw Error(ErrorKind::overflow, "exponent too large in evaluation at t = 1");
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), e.get_ui());
        if (sgn(c) > 0)
            num *= p;
        else
            den *= p;
    }
    UnityValue out;
    out.reduced_value = mpq_class(num, den);
    out.reduced_value.canonicalize();
    out.zero_order = sum.get_num().get_si();
    return out;
}

} // namespace qhs
