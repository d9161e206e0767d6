// qhs: invariants of weighted homogeneous links, branched covers and the
// rational homology 5-spheres they realize.
//
// Exit status: 0 on success, 1 for invalid input, 2 when the pipeline's
// cross-checks disagree.  Reports go to stdout, diagnostics to stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhs/cover.hpp"
#include "qhs/error.hpp"
#include "qhs/milnor_orlik.hpp"
#include "qhs/primes.hpp"
#include "qhs/realization.hpp"
#include "qhs/report.hpp"
#include "qhs/verify.hpp"
#include "qhs/weights.hpp"

namespace {

using qhs::json;

struct Report {
    json data;
    std::string text;
    int status = 0;
};

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string describe(const qhs::WeightSystem& ws)
{
    return "(" + join({ws.weights().begin(), ws.weights().end()}) + "; " + std::to_string(ws.degree()) + ")";
}

std::string divisor_text(const qhs::OrlikDivisor& div)
{
    if (div.is_zero())
        return "0";
    std::string s;
    for (auto it = div.terms().rbegin(); it != div.terms().rend(); ++it) {
        const auto& [j, c] = *it;
        mpq_class mag = abs(c);
        s += s.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        if (j == 1) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1)
            s += mag.get_str() + "*";
        s += "L" + std::to_string(j);
    }
    return s;
}

std::string link_text(const qhs::LinkInvariants& inv, const std::string& indent = "")
{
    std::ostringstream os;
    os << indent << "weights      " << describe(inv.system) << "\n"
       << indent << "divisor      " << divisor_text(inv.divisor) << "\n"
       << indent << inv.betti_label() << "           " << inv.multiplicity_of_unity << "\n";
    if (inv.genus)
        os << indent << "genus        " << *inv.genus << "\n";
    if (inv.char_poly)
        os << indent << "deg Delta    " << inv.char_poly->degree() << "\n";
    if (inv.delta_at_one)
        os << indent << "Delta(1)     " << inv.delta_at_one->get_str() << "\n";
    return os.str();
}

std::string cover_text(const qhs::CoverLink& c)
{
    std::ostringstream os;
    os << "base\n" << link_text(c.base_invariants, "  ") << "cover k=" << c.k << "\n"
       << link_text(c.invariants, "  ") << "paths agree  "
       << (c.paths_agree ? (*c.paths_agree ? "yes" : "NO") : "skipped") << "\n";
    return os.str();
}

std::string candidates_text(const std::vector<qhs::SmaleManifold>& ms)
{
    std::ostringstream os;
    for (const auto& m : ms)
        os << "  " << m.name() << "   H2 elementary divisors {" << join(m.elementary_divisors()) << "}\n";
    return os.str();
}

qhs::WeightSystem weights_arg(const std::vector<std::int64_t>& w, std::int64_t d)
{
    return qhs::WeightSystem(w, d);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of links of weighted homogeneous singularities and their branched covers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::int64_t> weights;
    std::int64_t degree = 0, k = 0, limit = 0, target_genus = 0, max_degree = 0, max_poly = 100000;
    std::optional<std::int64_t> prime;
    bool skip_direct = false, diagnostic = false, no_oracle = false;
    std::int64_t verify_degree = 40, verify_k = 12;

    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weights", weights, "Comma-separated weights")->delimiter(',')->required();
        sub->add_option("--degree", degree, "Degree d")->required();
    };

    auto* genus_cmd = app.add_subcommand("genus", "Genus, Fano index and reduced ratios of a 3-variable system");
    add_weights(genus_cmd);

    auto* link_cmd = app.add_subcommand("link", "Milnor-Orlik divisor, Betti number and Delta(t) of a link");
    add_weights(link_cmd);
    link_cmd->add_option("--max-poly-degree", max_poly, "Largest Delta(t) degree to expand");

    auto* cover_cmd = app.add_subcommand("cover", "k-fold branched cover z0^k + f3 over a 3-variable link");
    add_weights(cover_cmd);
    cover_cmd->add_option("-k", k, "Cover order")->required();
    cover_cmd->add_flag("--skip-direct-path", skip_direct, "Only compute (Lambda_k - 1) div(base)");
    cover_cmd->add_flag("--diagnostic", diagnostic, "Allow gcd(d, k) > 1 and report without checks");
    cover_cmd->add_option("--max-poly-degree", max_poly, "Largest Delta(t) degree to expand");

    auto* realize_cmd = app.add_subcommand("realize", "Rational homology 5-sphere with |H2| = K^2");
    realize_cmd->add_option("K", k, "Order k > 1")->required();
    realize_cmd->add_option("--prime", prime, "Family prime p = 3 mod 4 to use");
    realize_cmd->add_flag("--skip-direct-path", skip_direct, "Only compute (Lambda_k - 1) div(base)");

    auto* smale_cmd = app.add_subcommand("smale-enum", "Smale manifolds with |H2| = K^2");
    smale_cmd->add_option("K", k, "Order k >= 1")->required();

    auto* primes_cmd = app.add_subcommand("primes", "Primes p = 3 mod 4 up to a limit");
    primes_cmd->add_option("--limit", limit, "Upper bound")->required();

    auto* search_cmd = app.add_subcommand("search", "3-variable weight systems of a given genus");
    search_cmd->add_option("--genus", target_genus, "Target genus")->required();
    search_cmd->add_option("--max-degree", max_degree, "Largest degree")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-validate the pipeline over a grid of weight systems");
    verify_cmd->add_option("--max-degree", verify_degree, "Largest base degree");
    verify_cmd->add_option("--max-k", verify_k, "Largest cover order");
    verify_cmd->add_flag("--no-oracle", no_oracle, "Skip the polynomial oracle comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Report report;
    try {
        if (genus_cmd->parsed()) {
            const auto ws = weights_arg(weights, degree);
            const auto g = qhs::genus(ws);
            json ratios = json::array();
            for (const auto& r : qhs::reduced_ratios(ws))
                ratios.push_back({r.u, r.v});
            report.data = qhs::weights_to_json(ws);
            report.data["genus"] = g;
            report.data["fano_index"] = qhs::fano_index(ws);
            report.data["positive_genus_bound"] = qhs::positive_genus_bound_check(ws);
            report.data["reduced_ratios"] = ratios;
            report.text = "weights      " + describe(ws) + "\ngenus        " + std::to_string(g) +
                          "\nfano index   " + std::to_string(qhs::fano_index(ws)) + "\n";
        } else if (link_cmd->parsed()) {
            const auto ws = weights_arg(weights, degree);
            const auto inv = qhs::link_invariants(ws, {max_poly});
            report.data = qhs::link_to_json(inv);
            report.text = link_text(inv);
        } else if (cover_cmd->parsed()) {
            const auto ws = weights_arg(weights, degree);
            qhs::CoverOptions opts;
            opts.skip_direct_path = skip_direct;
            opts.diagnostic = diagnostic;
            opts.link.max_poly_degree = max_poly;
            const auto cover = qhs::build_cover(ws, k, opts);
            report.data = qhs::cover_to_json(cover);
            report.text = cover_text(cover);
        } else if (realize_cmd->parsed()) {
            qhs::CoverOptions opts;
            opts.skip_direct_path = skip_direct;
            const auto cert = qhs::realize(k, prime, opts);
            report.data = qhs::certificate_to_json(cert);
            std::ostringstream os;
            os << "k            " << cert.k << "\nprime        " << cert.family.p << "  base "
               << describe(cert.family.system) << "\ncover        " << describe(cert.cover.cover_system)
               << "\n|H2|         " << cert.h2_order.get_str() << "\nb2           "
               << cert.cover.invariants.multiplicity_of_unity << "\n"
               << (cert.unique() ? "manifold (unique)\n" : "candidates (group undetermined)\n")
               << candidates_text(cert.candidates);
            report.text = os.str();
        } else if (smale_cmd->parsed()) {
            const auto ms = qhs::smale_decompositions(k);
            json cands = json::array();
            for (const auto& m : ms)
                cands.push_back(qhs::manifold_to_json(m));
            report.data = {{"k", k}, {"candidates", cands}, {"unique", ms.size() == 1}};
            report.text = "k = " + std::to_string(k) + ", " + std::to_string(ms.size()) + " candidate(s)\n" +
                          candidates_text(ms);
        } else if (primes_cmd->parsed()) {
            const auto ps = qhs::primes_4l_minus_1(limit);
            report.data = {{"limit", limit}, {"primes", ps}};
            report.text = join(ps, " ") + "\n";
        } else if (search_cmd->parsed()) {
            const auto found = qhs::search_weight_systems(target_genus, max_degree);
            json systems = json::array();
            std::string text;
            for (const auto& ws : found) {
                systems.push_back(qhs::weights_to_json(ws));
                text += describe(ws) + "\n";
            }
            report.data = {{"genus", target_genus}, {"max_degree", max_degree},
                           {"count", found.size()}, {"systems", systems}};
            report.text = text;
        } else if (verify_cmd->parsed()) {
            const auto results = qhs::verify_grid({verify_degree, verify_k, !no_oracle});
            json props = json::array();
            bool all_ok = true;
            std::ostringstream os;
            for (const auto& r : results) {
                all_ok = all_ok && r.ok();
                props.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed},
                                 {"failures", r.sample_failures}});
                os << (r.ok() ? "PASS " : "FAIL ") << r.name << "  " << r.passed << " passed, "
                   << r.failed << " failed\n";
            }
            report.data = {{"max_degree", verify_degree}, {"max_k", verify_k},
                           {"oracle", !no_oracle}, {"properties", props}, {"ok", all_ok}};
            report.text = os.str();
            report.status = all_ok ? 0 : 2;
        }
    } catch (const qhs::Error& e) {
        std::cerr << "error (" << qhs::to_string(e.kind()) << "): " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }

    if (format == "json")
        std::cout << report.data.dump(2) << "\n";
    else
        std::cout << report.text;
    return report.status;
}
