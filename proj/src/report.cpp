#include "qhs/report.hpp"

#include <string>

#include "qhs/error.hpp"

namespace qhs {

json divisor_to_json(const OrlikDivisor& div)
{
    json out = json::array();
    for (const auto& [j, c] : div.terms())
        out.push_back({{"j", j}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return out;
}

OrlikDivisor divisor_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::malformed_divisor, "divisor JSON must be an array");
    OrlikDivisor::Terms terms;
    for (const auto& term : j) {
        const auto index = term.at("j").get<Index>();
        const mpz_class num(term.at("num").get<std::string>());
        const mpz_class den(term.at("den").get<std::string>());
        if (sgn(den) <= 0)
            throw Error(ErrorKind::malformed_divisor, "divisor denominators must be positive");
        if (terms.count(index))
            throw Error(ErrorKind::malformed_divisor, "repeated divisor index " + std::to_string(index));
        mpq_class c(num, den);
        c.canonicalize();
        terms.emplace(index, c);
    }
    return OrlikDivisor(std::move(terms));
}

json weights_to_json(const WeightSystem& ws)
{
    return {{"weights", json(std::vector<std::int64_t>(ws.weights().begin(), ws.weights().end()))},
            {"degree", ws.degree()}};
}

WeightSystem weights_from_json(const json& j)
{
    return WeightSystem(j.at("weights").get<std::vector<std::int64_t>>(), j.at("degree").get<std::int64_t>());
}

json poly_to_json(const CharPolynomial& p)
{
    json out = json::array();
    for (const auto& c : p.coefficients())
        out.push_back(c.get_str());
    return out;
}

json link_to_json(const LinkInvariants& inv)
{
    json out = weights_to_json(inv.system);
    out["divisor"] = divisor_to_json(inv.divisor);
    out["betti"] = inv.multiplicity_of_unity;
    out["betti_label"] = inv.betti_label();
    out["genus"] = inv.genus ? json(*inv.genus) : json(nullptr);
    out["delta_poly"] = inv.char_poly ? poly_to_json(*inv.char_poly) : json(nullptr);
    out["delta_at_one"] = inv.delta_at_one ? json(inv.delta_at_one->get_str()) : json(nullptr);
    out["fano_index"] = fano_index(inv.system);
    return out;
}

json cover_to_json(const CoverLink& cover)
{
    json out;
    out["k"] = cover.k;
    out["base"] = link_to_json(cover.base_invariants);
    out["cover"] = link_to_json(cover.invariants);
    out["paths_agree"] = cover.paths_agree ? json(*cover.paths_agree) : json(nullptr);
    out["direct_path"] = cover.paths_agree ? "computed" : "skipped";
    out["diagnostic"] = cover.diagnostic;
    out["h2_order"] = cover.invariants.delta_at_one ? json(cover.invariants.delta_at_one->get_str()) : json(nullptr);
    out["expected_h2_order"] = cover.expected_h2_order ? json(cover.expected_h2_order->get_str()) : json(nullptr);
    return out;
}

json family_to_json(const FamilyMember& m)
{
    json out = weights_to_json(m.system);
    out["p"] = m.p;
    out["l"] = m.l;
    return out;
}

json manifold_to_json(const SmaleManifold& m)
{
    json summands = json::array();
    for (const auto& s : m.summands)
        summands.push_back({{"prime", s.prime}, {"exponent", s.exponent}, {"order", s.order()}});
    return {{"name", m.name()},
            {"summands", summands},
            {"elementary_divisors", m.elementary_divisors()},
            {"h2_order", m.h2_order().get_str()},
            {"i_invariant", SmaleManifold::i_invariant}};
}

json certificate_to_json(const RealizationCertificate& cert)
{
    json candidates = json::array();
    for (const auto& m : cert.candidates)
        candidates.push_back(manifold_to_json(m));
    json out;
    out["k"] = cert.k;
    out["prime"] = cert.family.p;
    out["family"] = family_to_json(cert.family);
    out["cover"] = cover_to_json(cert.cover);
    out["h2_order"] = cert.h2_order.get_str();
    out["i_invariant"] = SmaleManifold::i_invariant;
    out["unique"] = cert.unique();
    out["group_undetermined"] = cert.group_undetermined();
    out["manifold"] = cert.unique() ? manifold_to_json(cert.candidates.front()) : json(nullptr);
    out["candidates"] = candidates;
    return out;
}

} // namespace qhs
