#include "qhs/oracle.hpp"

#include <numeric>
#include <vector>

#include "qhs/error.hpp"

namespace qhs::oracle {

namespace {

void multiply_binomial(std::vector<mpz_class>& p, std::size_t j)
{
    // p * (t^j - 1), in place from the top
    const std::size_t n = p.size();
    p.resize(n + j);
    // slots i >= n start out zero
    for (std::size_t i = n + j; i-- > 0;) {
        if (i >= j)
            mpz_sub(p[i].get_mpz_t(), p[i - j].get_mpz_t(), p[i].get_mpz_t());
        else
            mpz_neg(p[i].get_mpz_t(), p[i].get_mpz_t());
    }
}

void divide_binomial(std::vector<mpz_class>& p, std::size_t j)
{
    // p = q (t^j - 1)  =>  q[i - j] = p[i] + q[i], top-down
    if (p.size() <= j)
        throw Error(ErrorKind::not_a_polynomial, "t^j - 1 does not divide a lower-degree polynomial");
    const std::size_t qn = p.size() - j;
    std::vector<mpz_class> q(qn);
    for (std::size_t i = p.size(); i-- > j;) {
        const std::size_t k = i - j;
        q[k] = p[i];
        if (i < qn)
            q[k] += q[i];
    }
    // low coefficients: p[i] = -q[i] for i < j
    for (std::size_t i = 0; i < j; ++i) {
        const mpz_class expected = i < qn ? mpz_class(-q[i]) : mpz_class(0);
        if (p[i] != expected)
            throw Error(ErrorKind::not_a_polynomial, "t^j - 1 leaves a remainder");
    }
    p = std::move(q);
}

} // namespace

CharPolynomial oracle_expand(const OrlikDivisor& div)
{
    for (const auto& [j, c] : div.terms())
        if (c.get_den() != 1)
            throw Error(ErrorKind::integrality, "oracle expansion needs integral coefficients");

    std::vector<mpz_class> p{1};
    for (const auto& [j, c] : div.terms()) {
        if (sgn(c) <= 0)
            continue;
        for (mpz_class r = c.get_num(); sgn(r) > 0; --r)
            multiply_binomial(p, static_cast<std::size_t>(j));
    }
    for (const auto& [j, c] : div.terms()) {
        if (sgn(c) >= 0)
            continue;
        for (mpz_class r = -c.get_num(); sgn(r) > 0; --r)
            divide_binomial(p, static_cast<std::size_t>(j));
    }
    return CharPolynomial(std::move(p));
}

Angle make_angle(std::int64_t num, std::int64_t den)
{
    num %= den;
    if (num < 0)
        num += den;
    const auto g = std::gcd(num, den);
    return {num / g, den / g};
}

Angle add_angles(const Angle& a, const Angle& b)
{
    const __int128 den = static_cast<__int128>(a.second) / std::gcd(a.second, b.second) * b.second;
    const __int128 num = a.first * (den / a.second) + b.first * (den / b.second);
    return make_angle(static_cast<std::int64_t>(num % den), static_cast<std::int64_t>(den));
}

UnityRootMultiset UnityRootMultiset::of_binomial(std::int64_t j)
{
    UnityRootMultiset out;
    for (std::int64_t m = 0; m < j; ++m)
        out.add(make_angle(m, j), 1);
    return out;
}

UnityRootMultiset UnityRootMultiset::of_divisor(const OrlikDivisor& div)
{
    UnityRootMultiset out;
    for (const auto& [j, c] : div.terms())
        out += of_binomial(j).scaled(c);
    return out;
}

mpq_class UnityRootMultiset::total() const
{
    mpq_class s = 0;
    for (const auto& [a, w] : weights_)
        s += w;
    return s;
}

void UnityRootMultiset::add(const Angle& a, const mpq_class& w)
{
    auto& slot = weights_[a];
    slot += w;
    if (sgn(slot) == 0)
        weights_.erase(a);
}

UnityRootMultiset& UnityRootMultiset::operator+=(const UnityRootMultiset& rhs)
{
    for (const auto& [a, w] : rhs.weights_)
        add(a, w);
    return *this;
}

UnityRootMultiset UnityRootMultiset::scaled(const mpq_class& q) const
{
    UnityRootMultiset out;
    if (sgn(q) == 0)
        return out;
    for (const auto& [a, w] : weights_)
        out.weights_.emplace(a, w * q);
    return out;
}

UnityRootMultiset convolve(const UnityRootMultiset& a, const UnityRootMultiset& b)
{
    UnityRootMultiset out;
    for (const auto& [x, wx] : a.weights_)
        for (const auto& [y, wy] : b.weights_)
            out.add(add_angles(x, y), wx * wy);
    return out;
}

} // namespace qhs::oracle
