#include "qhs/weights.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "qhs/error.hpp"

namespace qhs {

namespace {

std::string describe(const WeightSystem& ws)
{
    std::string s = "(";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ws.weights()[i]);
    }
    return s + "; " + std::to_string(ws.degree()) + ")";
}

enum class GenusStatus { ok, wrong_arity, not_primitive, non_integral, negative };

GenusStatus genus_value(const WeightSystem& ws, std::int64_t& out)
{
    if (ws.size() != 3)
        return GenusStatus::wrong_arity;
    const auto w = ws.weights();
    const std::int64_t d = ws.degree();
    if (std::gcd(std::gcd(w[0], w[1]), w[2]) != 1)
        return GenusStatus::not_primitive;

    // 2g * w1 w2 w3, all terms brought over the common denominator
    const mpz_class w1 = static_cast<long>(w[0]);
    const mpz_class w2 = static_cast<long>(w[1]);
    const mpz_class w3 = static_cast<long>(w[2]);
    const mpz_class dd = static_cast<long>(d);
    const mpz_class prod = w1 * w2 * w3;
    const mpz_class pair_sum = static_cast<long>(std::gcd(w[0], w[1])) * w3
                             + static_cast<long>(std::gcd(w[0], w[2])) * w2
                             + static_cast<long>(std::gcd(w[1], w[2])) * w1;
    const mpz_class single_sum = static_cast<long>(std::gcd(d, w[0])) * w2 * w3
                               + static_cast<long>(std::gcd(d, w[1])) * w1 * w3
                               + static_cast<long>(std::gcd(d, w[2])) * w1 * w2;
    const mpz_class numer = dd * dd - dd * pair_sum + single_sum - prod;
    const mpz_class denom = 2 * prod;

    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
        return GenusStatus::non_integral;
    const mpz_class g = numer / denom;
    if (sgn(g) < 0)
        return GenusStatus::negative;
    out = g.get_si();
    return GenusStatus::ok;
}

} // namespace

WeightSystem::WeightSystem(std::vector<std::int64_t> weights, std::int64_t degree)
    : weights_(std::move(weights)), degree_(degree)
{
    if (weights_.size() < 2)
        throw Error(ErrorKind::invalid_weights, "a weight system needs at least two weights");
    for (auto w : weights_)
        if (w < 1)
            throw Error(ErrorKind::invalid_weights, "weights must be positive, got " + std::to_string(w));
    if (degree_ < 1)
        throw Error(ErrorKind::invalid_weights, "degree must be positive, got " + std::to_string(degree_));
}

std::vector<std::int64_t> WeightSystem::sorted_weights() const
{
    auto s = weights_;
    std::sort(s.begin(), s.end());
    return s;
}

bool operator==(const WeightSystem& a, const WeightSystem& b)
{
    return a.degree_ == b.degree_ && a.sorted_weights() == b.sorted_weights();
}

std::vector<ReducedRatio> reduced_ratios(const WeightSystem& ws)
{
    std::vector<ReducedRatio> out;
    out.reserve(ws.size());
    for (auto w : ws.weights()) {
        const auto g = std::gcd(ws.degree(), w);
        out.push_back({ws.degree() / g, w / g});
    }
    return out;
}

std::int64_t genus(const WeightSystem& ws)
{
    std::int64_t g = 0;
    switch (genus_value(ws, g)) {
    case GenusStatus::ok:
        return g;
    case GenusStatus::wrong_arity:
        throw Error(ErrorKind::invalid_weights,
                    "the genus formula needs exactly three weights, got " + std::to_string(ws.size()));
    case GenusStatus::not_primitive:
        throw Error(ErrorKind::not_smooth_curve,
                    "weights " + describe(ws) + " share a common factor; normalize them first");
    case GenusStatus::non_integral:
        throw Error(ErrorKind::not_smooth_curve,
                    "genus formula is not an integer for " + describe(ws));
    case GenusStatus::negative:
        throw Error(ErrorKind::not_smooth_curve,
                    "genus formula is negative for " + describe(ws));
    }
    return g;
}

std::optional<std::int64_t> try_genus(const WeightSystem& ws)
{
    std::int64_t g = 0;
    if (genus_value(ws, g) != GenusStatus::ok)
        return std::nullopt;
    return g;
}

std::int64_t fano_index(const WeightSystem& ws)
{
    return std::accumulate(ws.weights().begin(), ws.weights().end(), std::int64_t{0});
}

bool positive_genus_bound_check(const WeightSystem& ws)
{
    return fano_index(ws) <= ws.degree();
}

WeightedCurve weighted_curve(const WeightSystem& ws)
{
    return {ws, genus(ws)};
}

} // namespace qhs
