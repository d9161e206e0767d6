#include "qhs/verify.hpp"

#include <numeric>

#include "qhs/cover.hpp"
#include "qhs/divisor.hpp"
#include "qhs/error.hpp"
#include "qhs/milnor_orlik.hpp"
#include "qhs/oracle.hpp"

namespace qhs {

namespace {

std::string label(const WeightSystem& ws, std::int64_t k = 0)
{
    std::string s = "(";
    for (std::size_t i = 0; i < ws.size(); ++i)
        s += (i ? "," : "") + std::to_string(ws.weights()[i]);
    s += "; " + std::to_string(ws.degree()) + ")";
    if (k)
        s += " k=" + std::to_string(k);
    return s;
}

void record(PropertyResult& r, bool ok, const std::string& what)
{
    if (ok) {
        ++r.passed;
        return;
    }
    ++r.failed;
    if (r.sample_failures.size() < 10)
        r.sample_failures.push_back(what);
}

} // namespace

std::vector<WeightSystem> regression_grid(std::int64_t max_degree)
{
    std::vector<WeightSystem> out;
    for (std::int64_t d = 1; d <= max_degree; ++d) {
        for (std::int64_t w1 = 1; w1 <= d; ++w1) {
            for (std::int64_t w2 = w1; w2 <= d; ++w2) {
                for (std::int64_t w3 = w2; w3 <= d; ++w3) {
                    WeightSystem ws({w1, w2, w3}, d);
                    if (!try_genus(ws))
                        continue;
                    OrlikDivisor div = OrlikDivisor::one();
                    for (const auto& r : reduced_ratios(ws))
                        div *= linear_factor(r);
                    if (is_integral(div))
                        out.push_back(std::move(ws));
                }
            }
        }
    }
    return out;
}

std::vector<PropertyResult> verify_grid(const VerifyBounds& bounds)
{
    PropertyResult duality{"genus_betti_duality", 0, 0, {}};
    PropertyResult oracle_poly{"oracle_polynomial_agreement", 0, 0, {}};
    PropertyResult oracle_value{"oracle_delta_at_one_agreement", 0, 0, {}};
    PropertyResult two_path{"cover_two_path_identity", 0, 0, {}};
    PropertyResult order_law{"cover_order_law", 0, 0, {}};
    PropertyResult b2_zero{"cover_b2_vanishing", 0, 0, {}};

    for (const auto& ws : regression_grid(bounds.max_degree)) {
        const std::int64_t g = genus(ws);
        const OrlikDivisor div = milnor_orlik_divisor(ws);
        const std::int64_t b1 = betti_from_divisor(div);
        record(duality, 2 * g == b1, label(ws));

        if (bounds.oracle) {
            bool poly_ok = false, value_ok = false;
            if (!is_polynomial_valued(div)) {
                // both routes must refuse the same divisor
                auto refuses = [&](auto&& f) {
                    try {
                        f(div);
                    } catch (const Error& e) {
                        return e.kind() == ErrorKind::not_a_polynomial;
                    }
                    return false;
                };
                poly_ok = value_ok = refuses(char_poly_from_divisor) && refuses(oracle::oracle_expand);
            } else {
                try {
                    const CharPolynomial fast = char_poly_from_divisor(div);
                    const CharPolynomial slow = oracle::oracle_expand(div);
                    poly_ok = fast == slow;
                    const UnityValue at_one = evaluate_at_one_reduced(div);
                    value_ok = at_one.zero_order == b1 &&
                               mpq_class(slow.reduced_value_at_one(b1)) == at_one.reduced_value &&
                               (sgn(slow.evaluate(1)) == 0) == (b1 > 0);
                } catch (const Error&) {
                }
            }
            record(oracle_poly, poly_ok, label(ws));
            record(oracle_value, value_ok, label(ws));
        }

        for (std::int64_t k = 2; k <= bounds.max_k; ++k) {
            if (std::gcd(ws.degree(), k) != 1)
                continue;
            const OrlikDivisor via_base = cover_divisor(div, k);
            const OrlikDivisor direct = milnor_orlik_divisor(cover_weights(ws, k));
            record(two_path, via_base == direct, label(ws, k));
            record(b2_zero, sgn(coefficient_sum(via_base)) == 0, label(ws, k));

            bool order_ok = false;
            try {
                mpz_class expected;
                mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(k),
                              2 * static_cast<unsigned long>(g));
                order_ok = evaluate_at_one_reduced(via_base).reduced_value == mpq_class(expected);
            } catch (const Error&) {
            }
            record(order_law, order_ok, label(ws, k));
        }
    }

    std::vector<PropertyResult> out{duality};
    if (bounds.oracle) {
        out.push_back(oracle_poly);
        out.push_back(oracle_value);
    }
    out.push_back(two_path);
    out.push_back(order_law);
    out.push_back(b2_zero);
    return out;
}

} // namespace qhs
