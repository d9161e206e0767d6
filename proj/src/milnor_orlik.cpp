#include "qhs/milnor_orlik.hpp"

#include <string>
#include <utility>
#include <vector>

#include "qhs/error.hpp"

namespace qhs {

namespace {

struct SparseTerm {
    std::size_t exponent;
    mpz_class coeff;
};

std::size_t checked_size(const mpz_class& v, const char* what)
{
    if (sgn(v) < 0 || !v.fits_ulong_p())
        throw Error(ErrorKind::overflow, std::string(what) + " out of range");
    return v.get_ui();
}

/* (t^j - 1)^e = sum_i C(e,i) (-1)^{e-i} t^{ij} */
std::vector<SparseTerm> binomial_power(Index j, unsigned long e)
{
    std::vector<SparseTerm> out;
    out.reserve(e + 1);
    mpz_class c = 1;
    for (unsigned long i = 0; i <= e; ++i) {
        if (i > 0) {
            c *= e - i + 1;
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
        }
        out.push_back({i * static_cast<std::size_t>(j), (e - i) % 2 ? mpz_class(-c) : c});
    }
    return out;
}

std::vector<mpz_class> times_sparse(const std::vector<mpz_class>& dense,
                                    const std::vector<SparseTerm>& sparse)
{
    const std::size_t top = sparse.back().exponent;
    std::vector<mpz_class> out(dense.size() + top);
    for (const auto& term : sparse) {
        for (std::size_t n = 0; n < dense.size(); ++n) {
            if (sgn(dense[n]) != 0)
                mpz_addmul(out[n + term.exponent].get_mpz_t(), dense[n].get_mpz_t(),
                           term.coeff.get_mpz_t());
        }
    }
    return out;
}

std::vector<mpz_class> expand_product(const std::vector<std::pair<Index, unsigned long>>& factors)
{
    std::vector<mpz_class> acc{1};
    for (const auto& [j, e] : factors) {
        auto terms = binomial_power(j, e);
        if (acc.size() == 1 && acc[0] == 1) {
            acc.assign(terms.back().exponent + 1, 0);
            for (auto& t : terms)
                acc[t.exponent] = std::move(t.coeff);
        } else {
            acc = times_sparse(acc, terms);
        }
    }
    return acc;
}

} // namespace

OrlikDivisor linear_factor(const ReducedRatio& r)
{
    return scale(lambda(r.u), mpq_class(1, r.v)) - OrlikDivisor::one();
}

OrlikDivisor milnor_orlik_divisor(const WeightSystem& ws)
{
    OrlikDivisor div = OrlikDivisor::one();
    for (const auto& r : reduced_ratios(ws))
        div *= linear_factor(r);
    if (!is_integral(div))
        throw Error(ErrorKind::non_integral_divisor,
                    "the divisor product is not integral; these weights do not define an isolated singularity");
    return div;
}

std::int64_t betti_from_divisor(const OrlikDivisor& div)
{
    if (!is_integral(div))
        throw Error(ErrorKind::integrality, "Betti number needs an integral divisor");
    const mpq_class s = coefficient_sum(div);
    if (sgn(s) < 0)
        throw Error(ErrorKind::malformed_divisor,
                    "coefficient sum " + s.get_str() + " is negative; not the divisor of a polynomial");
    if (!s.get_num().fits_slong_p())
        throw Error(ErrorKind::overflow, "Betti number exceeds 64 bits");
    return s.get_num().get_si();
}

CharPolynomial char_poly_from_divisor(const OrlikDivisor& div)
{
    if (!is_integral(div))
        throw Error(ErrorKind::integrality, "characteristic polynomial needs an integral divisor");
    if (sgn(polynomial_degree(div)) < 0)
        throw Error(ErrorKind::not_a_polynomial, "divisor has negative degree");

    std::vector<std::pair<Index, unsigned long>> upper, lower;
    for (const auto& [j, c] : div.terms()) {
        const unsigned long e = checked_size(abs(c.get_num()), "exponent");
        (sgn(c) > 0 ? upper : lower).emplace_back(j, e);
    }

    std::vector<mpz_class> num = expand_product(upper);
    const std::vector<mpz_class> den = expand_product(lower);

    // den is monic: every factor t^j - 1 is
    std::vector<SparseTerm> den_terms;
    for (std::size_t i = 0; i < den.size(); ++i)
        if (sgn(den[i]) != 0)
            den_terms.push_back({i, den[i]});
    const std::size_t den_deg = den.size() - 1;
    if (num.size() < den.size())
        throw Error(ErrorKind::not_a_polynomial, "denominator has larger degree than numerator");

    std::vector<mpz_class> quot(num.size() - den_deg);
    for (std::size_t i = num.size(); i-- > den_deg;) {
        if (sgn(num[i]) == 0)
            continue;
        const std::size_t shift = i - den_deg;
        quot[shift] = num[i];
        for (const auto& term : den_terms)
            mpz_submul(num[shift + term.exponent].get_mpz_t(), quot[shift].get_mpz_t(),
                       term.coeff.get_mpz_t());
    }
    for (std::size_t i = 0; i < den_deg; ++i)
        if (sgn(num[i]) != 0)
            throw Error(ErrorKind::not_a_polynomial, "division by the negative part leaves a remainder");
    return CharPolynomial(std::move(quot));
}

std::string LinkInvariants::betti_label() const
{
    return "b" + std::to_string(static_cast<long>(system.size()) - 2);
}

LinkInvariants link_invariants_from_divisor(const WeightSystem& ws, OrlikDivisor div,
                                            const LinkOptions& opts)
{
    LinkInvariants out{ws, std::move(div), 0, std::nullopt, std::nullopt, std::nullopt};
    out.multiplicity_of_unity = betti_from_divisor(out.divisor);

    const UnityValue at_one = evaluate_at_one_reduced(out.divisor);
    if (at_one.zero_order != out.multiplicity_of_unity)
        throw Error(ErrorKind::cross_check, "zero order at t = 1 disagrees with the Betti number");
    if (!at_one.vanishes()) {
        if (at_one.reduced_value.get_den() != 1 || sgn(at_one.reduced_value) <= 0)
            throw Error(ErrorKind::cross_check,
                        "Delta(1) = " + at_one.reduced_value.get_str() + " is not a positive integer");
        out.delta_at_one = at_one.reduced_value.get_num();
    }

    if (polynomial_degree(out.divisor) <= opts.max_poly_degree) {
        out.char_poly = char_poly_from_divisor(out.divisor);
        const mpz_class value = out.char_poly->evaluate(1);
        if ((sgn(value) == 0) != (out.multiplicity_of_unity > 0))
            throw Error(ErrorKind::cross_check, "Delta(1) vanishing disagrees with the Betti number");
        if (out.delta_at_one && value != *out.delta_at_one)
            throw Error(ErrorKind::cross_check, "Delta(1) from the polynomial disagrees with the divisor");
    }

    if (ws.size() == 3) {
        const std::int64_t g = genus(ws);
        if (2 * g != out.multiplicity_of_unity)
            throw Error(ErrorKind::cross_check,
                        "genus " + std::to_string(g) + " does not match b1 = " +
                            std::to_string(out.multiplicity_of_unity));
        out.genus = g;
    }
    return out;
}

LinkInvariants link_invariants(const WeightSystem& ws, const LinkOptions& opts)
{
    return link_invariants_from_divisor(ws, milnor_orlik_divisor(ws), opts);
}

} // namespace qhs
