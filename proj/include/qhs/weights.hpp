#ifndef QHS_WEIGHTS_HPP
#define QHS_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qhs {

/* d / w_i = u_i / v_i in lowest terms. */
struct ReducedRatio {
    std::int64_t u = 1;
    std::int64_t v = 1;

    friend bool operator==(const ReducedRatio&, const ReducedRatio&) = default;
};

/*
 * Weights (w_1, ..., w_n) and degree d of a weighted homogeneous polynomial.
 * Weights keep the order they were given in; comparison is on the sorted
 * weights and the degree, since every invariant is symmetric in the weights.
 */
class WeightSystem {
public:
    /* Throws invalid_weights unless n >= 2, every w_i >= 1 and d >= 1. */
    WeightSystem(std::vector<std::int64_t> weights, std::int64_t degree);

    std::span<const std::int64_t> weights() const noexcept { return weights_; }
    std::int64_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return weights_.size(); }

    std::vector<std::int64_t> sorted_weights() const;

    friend bool operator==(const WeightSystem& a, const WeightSystem& b);

private:
    std::vector<std::int64_t> weights_;
    std::int64_t degree_;
};

std::vector<ReducedRatio> reduced_ratios(const WeightSystem& ws);

/*
 * Orlik-Wagreich genus of the curve cut out in P(w) by a quasi-smooth
 * polynomial with these weights:
 *
 *   g = 1/2 ( d^2/(w1 w2 w3) - d sum_{i<j} gcd(wi,wj)/(wi wj)
 *             + sum_i gcd(d,wi)/wi - 1 )
 *
 * Needs n = 3 and a primitive weight vector.  A non-integral or negative
 * value means no quasi-smooth curve has these weights; that is reported as
 * not_smooth_curve.  Integrality is only a proxy for quasi-smoothness.
 */
std::int64_t genus(const WeightSystem& ws);

/* Same as genus() but returns nullopt instead of throwing on a rejected system. */
std::optional<std::int64_t> try_genus(const WeightSystem& ws);

std::int64_t fano_index(const WeightSystem& ws);

/* w1 + w2 + w3 <= d, necessary for positive genus. */
bool positive_genus_bound_check(const WeightSystem& ws);

struct WeightedCurve {
    WeightSystem system;
    std::int64_t genus;
};

WeightedCurve weighted_curve(const WeightSystem& ws);

} // namespace qhs

#endif
