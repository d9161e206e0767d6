#include "qhs/cover.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "qhs/error.hpp"

namespace qhs {

namespace {

void check_cover_inputs(const WeightSystem& base, std::int64_t k, bool allow_non_coprime)
{
    if (base.size() != 3)
        throw Error(ErrorKind::invalid_weights,
                    "branched covers are built over 3-variable links, got " + std::to_string(base.size()));
    if (k < 2)
        throw Error(ErrorKind::range, "cover order k must be an integer > 1, got " + std::to_string(k));
    if (!allow_non_coprime && std::gcd(base.degree(), k) != 1)
        throw Error(ErrorKind::coprimality,
                    "gcd(d, k) = gcd(" + std::to_string(base.degree()) + ", " + std::to_string(k) +
                        ") = " + std::to_string(std::gcd(base.degree(), k)) + ", must be 1");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorKind::overflow, "cover weights exceed 64 bits");
    return out;
}

WeightSystem make_cover_weights(const WeightSystem& base, std::int64_t k)
{
    std::vector<std::int64_t> w;
    w.reserve(4);
    w.push_back(base.degree());
    for (auto wi : base.weights())
        w.push_back(checked_mul(k, wi));
    return WeightSystem(std::move(w), checked_mul(k, base.degree()));
}

} // namespace

WeightSystem cover_weights(const WeightSystem& base, std::int64_t k)
{
    check_cover_inputs(base, k, false);
    return make_cover_weights(base, k);
}

OrlikDivisor cover_divisor(const OrlikDivisor& base_div, std::int64_t k)
{
    if (k < 2)
        throw Error(ErrorKind::range, "cover order k must be an integer > 1, got " + std::to_string(k));
    if (!is_integral(base_div))
        throw Error(ErrorKind::integrality, "base divisor must be integral");
    return (lambda(k) - OrlikDivisor::one()) * base_div;
}

CoverLink build_cover(const WeightSystem& base, std::int64_t k, const CoverOptions& opts)
{
    check_cover_inputs(base, k, opts.diagnostic);
    const WeightSystem system = make_cover_weights(base, k);
    genus(base);

    LinkInvariants base_inv = link_invariants(base, opts.link);
    OrlikDivisor via_base = cover_divisor(base_inv.divisor, k);

    const bool direct = !opts.skip_direct_path && system.degree() <= opts.direct_path_max_degree;
    std::optional<bool> agree;
    if (direct) {
        // the direct path also expands Delta(t) below; the divisor-only path never does
        agree = milnor_orlik_divisor(system) == via_base;
        if (!*agree && !opts.diagnostic)
            throw Error(ErrorKind::theorem_violation,
                        "cover divisor from the 4-variable weights differs from (Lambda_k - 1) div(base)");
    }

    LinkOptions link_opts = opts.link;
    if (!direct)
        link_opts.max_poly_degree = -1;

    if (opts.diagnostic) {
        // report only: b2 may be positive and Delta(1) absent
        LinkInvariants inv{system, via_base, 0, std::nullopt, std::nullopt, std::nullopt};
        const mpq_class s = coefficient_sum(via_base);
        inv.multiplicity_of_unity = s.get_num().get_si();
        if (sgn(s) == 0)
            inv.delta_at_one = evaluate_at_one_reduced(via_base).reduced_value.get_num();
        return {base, k, system, std::move(base_inv), std::move(inv), agree, std::nullopt, true};
    }

    LinkInvariants inv = link_invariants_from_divisor(system, std::move(via_base), link_opts);
    if (inv.multiplicity_of_unity != 0)
        throw Error(ErrorKind::theorem_violation,
                    "cover has b2 = " + std::to_string(inv.multiplicity_of_unity) + ", expected 0");

    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(k),
                  2 * static_cast<unsigned long>(*base_inv.genus));
    if (!inv.delta_at_one || *inv.delta_at_one != expected)
        throw Error(ErrorKind::theorem_violation,
                    "|H2| = " + (inv.delta_at_one ? inv.delta_at_one->get_str() : std::string("?")) +
                        " differs from k^(2g) = " + expected.get_str());

    return {base, k, system, std::move(base_inv), std::move(inv), agree, expected, false};
}

} // namespace qhs
