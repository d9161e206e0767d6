#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qhs/error.hpp"
#include "qhs/milnor_orlik.hpp"
#include "qhs/oracle.hpp"
#include "qhs/verify.hpp"

using namespace qhs;
using qhs::oracle::UnityRootMultiset;

namespace {

using Dense = std::vector<mpz_class>;

Dense dense_mul(const Dense& a, const Dense& b)
{
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

const OrlikDivisor poincare{{30, 1}, {6, -1}, {10, -1}, {15, -1}, {2, 1}, {3, 1}, {5, 1}, {1, -1}};

} // namespace

TEST_CASE("milnor_orlik_divisor")
{
    CHECK(milnor_orlik_divisor(WeightSystem({1, 1, 1}, 3)) == OrlikDivisor{{3, 3}, {1, -1}});
    CHECK(milnor_orlik_divisor(WeightSystem({1, 2, 3}, 7)) == OrlikDivisor{{7, 3}, {1, -1}});
    CHECK(milnor_orlik_divisor(WeightSystem({15, 10, 6}, 30)) == poincare);

    SUBCASE("root-multiset oracle for the rational intermediates")
    {
        UnityRootMultiset acc = UnityRootMultiset::of_binomial(1);
        for (const auto& r : reduced_ratios(WeightSystem({1, 2, 3}, 7))) {
            auto f = UnityRootMultiset::of_binomial(r.u).scaled(mpq_class(1, r.v));
            f += UnityRootMultiset::of_binomial(1).scaled(-1);
            acc = convolve(acc, f);
        }
        CHECK(acc == UnityRootMultiset::of_divisor(OrlikDivisor{{7, 3}, {1, -1}}));
    }

    SUBCASE("non-quasi-smooth weights give a non-integral product")
    {
        try {
            milnor_orlik_divisor(WeightSystem({1, 4, 6}, 8));
            FAIL("expected non-integral divisor");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::non_integral_divisor);
            CHECK(e.exit_code() == 1);
        }
    }
}

TEST_CASE("association order does not matter")
{
    for (const auto& ws : {WeightSystem({1, 2, 3}, 7), WeightSystem({2, 3, 5, 7}, 210),
                           WeightSystem({3, 4, 5}, 60), WeightSystem({1, 5, 7}, 35)}) {
        std::vector<OrlikDivisor> fs;
        for (const auto& r : reduced_ratios(ws))
            fs.push_back(linear_factor(r));
        std::vector<std::size_t> perm(fs.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        const OrlikDivisor reference = fs[0] * fs[1] * (fs.size() > 2 ? fs[2] : OrlikDivisor::one()) *
                                       (fs.size() > 3 ? fs[3] : OrlikDivisor::one());
        do {
            OrlikDivisor right = OrlikDivisor::one();
            for (auto it = perm.rbegin(); it != perm.rend(); ++it)
                right = fs[*it] * right;
            CHECK(right == reference);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("betti_from_divisor")
{
    CHECK(betti_from_divisor(OrlikDivisor{{3, 3}, {1, -1}}) == 2);
    CHECK(betti_from_divisor(OrlikDivisor{{6, 3}, {3, -3}, {2, -1}, {1, 1}}) == 0);
    CHECK(betti_from_divisor(lambda(1)) == 1);
    CHECK_THROWS_AS(betti_from_divisor(OrlikDivisor{{1, -2}}), Error);
    CHECK_THROWS_AS(betti_from_divisor(OrlikDivisor{{7, mpq_class(1, 2)}}), Error);
}

TEST_CASE("char_poly_from_divisor")
{
    SUBCASE("cubic: (t^2+t+1)^3 (t-1)^2")
    {
        const Dense q{1, 1, 1}, lin{-1, 1};
        const Dense expected = dense_mul(dense_mul(dense_mul(q, q), dense_mul(q, lin)), lin);
        const auto p = char_poly_from_divisor(OrlikDivisor{{3, 3}, {1, -1}});
        CHECK(p.degree() == 8);
        CHECK(p.coefficients() == expected);
    }
    SUBCASE("Lambda_1")
    {
        CHECK(char_poly_from_divisor(lambda(1)).coefficients() == Dense{-1, 1});
    }
    SUBCASE("Poincare sphere: E8 polynomial")
    {
        const auto p = char_poly_from_divisor(poincare);
        CHECK(p.coefficients() == Dense{1, 1, 0, -1, -1, -1, 0, 1, 1});
        CHECK(p.evaluate(1) == 1);
    }
    SUBCASE("Lambda_2 + Lambda_3 - 1")
    {
        CHECK(char_poly_from_divisor(OrlikDivisor{{2, 1}, {3, 1}, {1, -1}}).coefficients() ==
              Dense{-1, -1, 0, 1, 1});
    }
    SUBCASE("zero divisor is the constant 1")
    {
        CHECK(char_poly_from_divisor(OrlikDivisor::zero()).coefficients() == Dense{1});
    }
    SUBCASE("not a polynomial")
    {
        CHECK_THROWS_AS(char_poly_from_divisor(OrlikDivisor{{2, 1}, {3, -1}}), Error);
        CHECK_THROWS_AS(char_poly_from_divisor(OrlikDivisor{{4, 1}, {3, -1}}), Error);
        CHECK_THROWS_AS(oracle::oracle_expand(OrlikDivisor{{4, 1}, {3, -1}}), Error);
    }
}

TEST_CASE("link_invariants")
{
    SUBCASE("family member p = 7")
    {
        const auto inv = link_invariants(WeightSystem({1, 2, 3}, 7));
        CHECK(inv.divisor == OrlikDivisor{{7, 3}, {1, -1}});
        CHECK(inv.multiplicity_of_unity == 2);
        CHECK(inv.genus == 1);
        CHECK_FALSE(inv.delta_at_one.has_value());
        REQUIRE(inv.char_poly.has_value());
        CHECK(inv.char_poly->evaluate(1) == 0);
        CHECK(inv.betti_label() == "b1");
    }
    SUBCASE("Poincare sphere")
    {
        const auto inv = link_invariants(WeightSystem({15, 10, 6}, 30));
        CHECK(inv.multiplicity_of_unity == 0);
        CHECK(inv.delta_at_one == mpz_class(1));
        CHECK(inv.genus == 0);
    }
    SUBCASE("cubic cover k = 2")
    {
        const auto inv = link_invariants(WeightSystem({3, 2, 2, 2}, 6));
        CHECK(inv.multiplicity_of_unity == 0);
        CHECK(inv.delta_at_one == mpz_class(4));
        CHECK_FALSE(inv.genus.has_value());
        CHECK(inv.betti_label() == "b2");
    }
    SUBCASE("degree limit leaves the polynomial out")
    {
        const auto inv = link_invariants(WeightSystem({1, 1, 1}, 3), {4});
        CHECK_FALSE(inv.char_poly.has_value());
        CHECK(inv.multiplicity_of_unity == 2);
    }
}

TEST_CASE("pipeline and oracle agree on a small grid")
{
    for (const auto& ws : regression_grid(14)) {
        const auto div = milnor_orlik_divisor(ws);
        const auto fast = char_poly_from_divisor(div);
        const auto slow = oracle::oracle_expand(div);
        CHECK(fast == slow);
        CHECK(mpq_class(fast.degree()) == polynomial_degree(div));

        const auto b1 = betti_from_divisor(div);
        CHECK(2 * genus(ws) == b1);
        CHECK(mpq_class(slow.reduced_value_at_one(b1)) == evaluate_at_one_reduced(div).reduced_value);
    }
}

TEST_CASE("reduced value at one matches repeated synthetic division")
{
    // (t-1)^3 (t^2 + 2)  ->  Q(1) = 3
    const Dense q{2, 0, 1}, lin{-1, 1};
    const CharPolynomial p(dense_mul(dense_mul(dense_mul(q, lin), lin), lin));
    CHECK(p.evaluate(1) == 0);
    CHECK(p.reduced_value_at_one(3) == 3);
    CHECK(p.reduced_value_at_one(0) == 0);
}
