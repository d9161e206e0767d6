#include <doctest.h>

#include <random>

#include "qhs/error.hpp"
#include "qhs/report.hpp"

using namespace qhs;

TEST_CASE("divisor JSON is sorted, reduced and base 10")
{
    const OrlikDivisor d{{7, mpq_class(2, 6)}, {1, -1}};
    const json j = divisor_to_json(d);
    CHECK(j.dump() == R"([{"den":"1","j":1,"num":"-1"},{"den":"3","j":7,"num":"1"}])");
    CHECK(divisor_to_json(OrlikDivisor::zero()).dump() == "[]");

    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);
    const json big = divisor_to_json(OrlikDivisor{{2, mpq_class(huge)}});
    CHECK(big[0]["num"] == "1" + std::string(40, '0'));
}

TEST_CASE("divisor JSON round trip")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> idx(1, 90), num(-50, 50), den(1, 9), n(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        OrlikDivisor::Terms t;
        for (int i = n(rng); i > 0; --i)
            t[idx(rng)] += mpq_class(num(rng), den(rng));
        for (auto& [j, c] : t)
            c.canonicalize();
        const OrlikDivisor d(std::move(t));
        CHECK(divisor_from_json(json::parse(divisor_to_json(d).dump())) == d);
    }
}

TEST_CASE("divisor JSON rejects malformed input")
{
    CHECK_THROWS_AS(divisor_from_json(json::parse(R"([{"j":0,"num":"1","den":"1"}])")), Error);
    CHECK_THROWS_AS(divisor_from_json(json::parse(R"([{"j":2,"num":"1","den":"-3"}])")), Error);
    CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"j":2})")), Error);
}

TEST_CASE("weights JSON")
{
    const WeightSystem ws({1, 2, 3}, 7);
    CHECK(weights_to_json(ws).dump() == R"({"degree":7,"weights":[1,2,3]})");
    CHECK(weights_from_json(weights_to_json(ws)) == ws);
}

TEST_CASE("link report fields")
{
    const json j = link_to_json(link_invariants(WeightSystem({1, 2, 3}, 7)));
    CHECK(j["betti"] == 2);
    CHECK(j["genus"] == 1);
    CHECK(j["delta_at_one"].is_null());
    CHECK(j["delta_poly"].is_array());
    CHECK(j["delta_poly"].size() == 21);

    const json s = link_to_json(link_invariants(WeightSystem({15, 10, 6}, 30)));
    CHECK(s["delta_at_one"] == "1");
    CHECK(s["delta_poly"] == json::array({"1", "1", "0", "-1", "-1", "-1", "0", "1", "1"}));
}

TEST_CASE("certificate report")
{
    const json c = certificate_to_json(realize(8));
    CHECK(c["h2_order"] == "64");
    CHECK(c["group_undetermined"] == true);
    CHECK(c["manifold"].is_null());
    CHECK(c["candidates"].size() == 3);
    CHECK(c["candidates"][0]["name"] == "M_8");
    CHECK(c["i_invariant"] == 0);
    CHECK(c["cover"]["paths_agree"] == true);

    const json u = certificate_to_json(realize(6));
    CHECK(u["manifold"]["name"] == "M_2#M_3");
    CHECK(u["manifold"]["elementary_divisors"] == json::array({2, 2, 3, 3}));
    CHECK(certificate_to_json(realize(6)).dump() == u.dump());
}
