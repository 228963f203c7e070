#include <CLI11.hpp>
#include <json.hpp>

#include <ziq/render.hpp>
#include <ziq/selftest.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using ziq::big_int;
using G = ziq::gint;
using njson = nlohmann::ordered_json;

namespace {

struct global_opts {
    int bound = 8;
    int workers = 1;
    std::string format = "text";
    std::string equation = "fermat";
};

std::string trim_note(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == ';')) s.pop_back();
    return s;
}

int run_search_cmd(const global_opts& g, bool include_imprimitive) {
    auto job = ziq::parse_equation_spec<big_int>(g.equation);
    job.bound = g.bound;
    job.workers = g.workers;
    job.require_primitive = !include_imprimitive;
    const auto res = ziq::run_search(job);
    if (g.format == "json")
        std::cout << ziq::render_json(job, res);
    else if (g.format == "csv")
        std::cout << ziq::render_csv(job, res);
    else
        std::cout << ziq::render_text(job, res);
    return 0;
}

int run_verify_cmd(const global_opts& g, std::vector<std::string> tags) {
    if (tags.empty()) tags = ziq::theorem_tags();
    bool all_pass = true;
    njson arr = njson::array();
    std::string csv = "tag,bound,raw_count,orbit_count,result\n";
    std::string text;
    for (const auto& tag : tags) {
        const auto rep = ziq::verify_theorem(tag, g.bound, g.workers);
        all_pass = all_pass && rep.pass;
        if (g.format == "json") {
            njson j;
            j["tag"] = rep.tag;
            j["statement"] = rep.statement;
            j["equation"] = rep.equation_text;
            j["bound"] = rep.bound;
            j["raw_count"] = rep.raw_count;
            j["orbit_count"] = rep.orbit_count;
            j["pass"] = rep.pass;
            j["notes"] = rep.notes;
            j["witnesses"] = rep.witnesses;
            arr.push_back(j);
        } else if (g.format == "csv") {
            csv += rep.tag + ',' + std::to_string(rep.bound) + ',' +
                   std::to_string(rep.raw_count) + ',' + std::to_string(rep.orbit_count) + ',' +
                   (rep.pass ? "PASS" : "FAIL") + '\n';
        } else {
            if (!text.empty()) text += '\n';
            text += ziq::render_report_text(rep);
        }
    }
    if (g.format == "json")
        std::cout << arr.dump(2) << '\n';
    else if (g.format == "csv")
        std::cout << csv;
    else
        std::cout << text;
    return all_pass ? 0 : 1;
}

int run_factor_cmd(const global_opts& g, const std::string& literal) {
    const G z = ziq::parse_gint<big_int>(literal);
    const auto f = ziq::factor(z);
    std::string product;
    if (f.unit.k != 0) product += "i^" + std::to_string(f.unit.k);
    for (const auto& pp : f.primes) {
        if (!product.empty()) product += '*';
        product += '(' + ziq::to_string(pp.p) + ')';
        if (pp.e > 1) product += '^' + std::to_string(pp.e);
    }
    if (product.empty()) product = "1";
    if (g.format == "json") {
        njson j;
        j["input"] = ziq::to_string(z);
        j["factorization"] = product;
        j["unit_exponent"] = f.unit.k;
        njson parts = njson::array();
        for (const auto& pp : f.primes)
            parts.push_back({{"prime", ziq::to_string(pp.p)}, {"exponent", pp.e}});
        j["factors"] = parts;
        j["norm"] = ziq::int_to_string(ziq::norm(z));
        j["nu"] = f.total_multiplicity();
        j["in_G"] = ziq::in_G(z);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << ziq::to_string(z) << " = " << product << '\n';
        std::cout << "norm: " << ziq::int_to_string(ziq::norm(z)) << '\n';
        std::cout << "nu: " << f.total_multiplicity() << '\n';
        std::cout << "in G: " << (ziq::in_G(z) ? "yes" : "no") << '\n';
    }
    return 0;
}

int run_gcd_cmd(const global_opts& g, const std::string& lit_a, const std::string& lit_b) {
    const G a = ziq::parse_gint<big_int>(lit_a);
    const G b = ziq::parse_gint<big_int>(lit_b);
    const G d = ziq::gcd(a, b);
    if (g.format == "json") {
        njson j;
        j["a"] = ziq::to_string(a);
        j["b"] = ziq::to_string(b);
        j["gcd"] = ziq::to_string(d);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gcd(" << ziq::to_string(a) << ", " << ziq::to_string(b)
                  << ") = " << ziq::to_string(d) << '\n';
    }
    return 0;
}

int run_resolvent_cmd(const global_opts& g, const std::string& lit_u, const std::string& lit_v) {
    const auto job = ziq::parse_equation_spec<big_int>(g.equation);
    if (job.is_z4)
        throw std::invalid_argument("resolvent: the biquadratic z^4 forms have no resolvent row");
    const auto rp = ziq::resolvent_params_for(job.eq);
    if (!rp) throw std::invalid_argument("resolvent: equation outside the resolvent catalog");
    const G u = ziq::parse_gint<big_int>(lit_u);
    const G v = ziq::parse_gint<big_int>(lit_v);
    const G s = ziq::sq(u) + rp->eps * ziq::sq(v);
    const G k = rp->mu * ziq::sq(G(u * v));
    const G disc = ziq::resolvent_discriminant(job.eq, u, v);
    const auto root = ziq::exact_sqrt(disc);
    const bool has_root =
        u.is_zero() || v.is_zero() ? true : ziq::resolvent_has_root(*rp, u, v);

    std::optional<ziq::reduction_outcome<big_int>> red;
    if (root && !u.is_zero() && !v.is_zero() && ziq::coprime(u, v))
        red = ziq::reduce_quartic(job.eq, u, v, *root);

    if (g.format == "json") {
        njson j;
        j["equation"] = {{"id", job.id}, {"form", job.form}};
        j["eps"] = ziq::to_string(rp->eps);
        j["mu"] = ziq::to_string(rp->mu);
        j["u"] = ziq::to_string(u);
        j["v"] = ziq::to_string(v);
        j["linear_coefficient"] = ziq::to_string(s);
        j["constant_term"] = ziq::to_string(k);
        j["discriminant"] = ziq::to_string(disc);
        j["square_discriminant"] = root.has_value();
        if (root) j["sqrt"] = ziq::to_string(*root);
        j["has_root"] = has_root;
        if (red) {
            njson r;
            r["u_half"] = ziq::to_string(red->u_half);
            r["v_half"] = ziq::to_string(red->v_half);
            r["note"] = red->note;
            r["domain_note"] = trim_note(red->domain_note);
            if (red->system) {
                r["system"] = {{"U", ziq::to_string(red->system->u)},
                               {"V", ziq::to_string(red->system->v)},
                               {"U_prime", ziq::to_string(red->system->u_prime)},
                               {"V_prime", ziq::to_string(red->system->v_prime)},
                               {"eps", ziq::to_string(red->system->eps)}};
            }
            j["reduction"] = r;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "equation: " << job.form << " [" << job.id << "]\n";
        std::cout << "eps = " << ziq::to_string(rp->eps) << ", mu = " << ziq::to_string(rp->mu)
                  << '\n';
        std::cout << "u = " << ziq::to_string(u) << ", v = " << ziq::to_string(v) << '\n';
        std::cout << "resolvent: z^2 - S*z - K with S = u^2 + eps*v^2 = " << ziq::to_string(s)
                  << ", K = mu*(u*v)^2 = " << ziq::to_string(k) << '\n';
        std::cout << "discriminant: " << ziq::to_string(disc) << '\n';
        std::cout << "square discriminant: "
                  << (root ? "yes (sqrt = " + ziq::to_string(*root) + ")" : "no") << '\n';
        std::cout << "has Z[i] root: " << (has_root ? "yes" : "no") << '\n';
        if (red) {
            std::cout << "half-sums: u' = " << ziq::to_string(red->u_half)
                      << ", v' = " << ziq::to_string(red->v_half) << '\n';
            if (red->system) {
                std::cout << "system: U = " << ziq::to_string(red->system->u)
                          << ", V = " << ziq::to_string(red->system->v)
                          << ", U' = " << ziq::to_string(red->system->u_prime)
                          << ", V' = " << ziq::to_string(red->system->v_prime)
                          << ", eps = " << ziq::to_string(red->system->eps) << '\n';
            } else {
                std::cout << "note: " << red->note << '\n';
            }
            if (!red->domain_note.empty())
                std::cout << "domain: " << trim_note(red->domain_note) << '\n';
        }
    }
    return 0;
}

int run_descent_check_cmd(const global_opts& g, const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("descent-check: cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const auto cert = ziq::parse_certificate<big_int>(text);
    const auto res = ziq::verify_descent_certificate(cert);
    if (g.format == "json") {
        njson j;
        j["entries"] = cert.chain.size();
        j["ok"] = res.ok;
        j["reason"] = res.reason;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "entries: " << cert.chain.size() << '\n';
        if (!res.reason.empty()) std::cout << "reason: " << res.reason << '\n';
        std::cout << "result: " << (res.ok ? "PASS" : "FAIL") << '\n';
    }
    return res.ok ? 0 : 1;
}

int run_oracle_cmd(const global_opts& g, std::uint64_t gcd_norm_bound,
                   std::uint64_t partition_bound, std::uint64_t monotone_bound,
                   std::size_t pairs, std::uint64_t seed) {
    struct named {
        std::string name;
        ziq::check_summary sum;
    };
    const std::vector<named> suites{
        {"gcd-oracle", ziq::oracle_gcd_exhaustive(gcd_norm_bound)},
        {"nu-suite", ziq::oracle_nu_suite(partition_bound, monotone_bound, pairs, seed)}};
    bool all_pass = true;
    for (const auto& s : suites) all_pass = all_pass && s.sum.pass();
    if (g.format == "json") {
        njson arr = njson::array();
        for (const auto& s : suites)
            arr.push_back({{"name", s.name},
                           {"checks", s.sum.checks},
                           {"failures", s.sum.failures},
                           {"first_failure", s.sum.first_failure}});
        njson j;
        j["suites"] = arr;
        j["pass"] = all_pass;
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& s : suites) {
            std::cout << (s.sum.pass() ? "[PASS] " : "[FAIL] ") << s.name << " ("
                      << s.sum.checks << " checks)";
            if (!s.sum.pass()) std::cout << ": " << s.sum.first_failure;
            std::cout << '\n';
        }
        std::cout << "oracle: " << (all_pass ? "PASS" : "FAIL") << '\n';
    }
    return all_pass ? 0 : 1;
}

int run_selftest_cmd(const global_opts& g, std::uint64_t seed) {
    ziq::selftest_options opt;
    opt.seed = seed;
    const auto rep = ziq::run_selftest(opt);
    if (g.format == "json") {
        njson arr = njson::array();
        for (const auto& s : rep.suites)
            arr.push_back({{"name", s.name},
                           {"checks", s.checks},
                           {"pass", s.pass},
                           {"detail", s.detail}});
        njson j;
        j["seed"] = seed;
        j["suites"] = arr;
        j["all_pass"] = rep.all_pass();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << rep.to_text();
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ziq: quartic Diophantine desk checks over the Gaussian integers Z[i].\n"
        "Searches a X^4 + b X^2Y^2 + c Y^4 = d Z^2 (and X^4 + eps Y^2 = Z^4) in exact\n"
        "arithmetic, groups solutions into unit orbits, and verifies the catalog claims."};
    app.set_version_flag("--version", "ziq 1.0.0");

    global_opts g;
    app.add_option("--bound", g.bound,
                   "box bound: search X, Y with max(|re|,|im|) <= bound; Z is derived")
        ->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads for the search partition")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--equation", g.equation,
                   "catalog id (fermat, szabo, fermat_1pi, mordell, mordell_neg, mordell_2i, "
                   "mordell_2i_neg, z4_i, z4_1pi) or four literals a,b,c,d")
        ->capture_default_str();
    app.set_config("--config", "", "config file with key=value lines mirroring the flags");
    app.require_subcommand(0, 1);

    auto* search_cmd = app.add_subcommand("search", "bounded exhaustive solution search");
    search_cmd->fallthrough();
    bool include_imprimitive = false;
    search_cmd->add_flag("--include-imprimitive", include_imprimitive,
                         "also keep solutions whose gcd(x,y,z) is not a unit");

    auto* verify_cmd =
        app.add_subcommand("verify", "desk-check catalog claims against the search");
    verify_cmd->fallthrough();
    std::vector<std::string> tags;
    verify_cmd->add_option("tags", tags,
                           "claim tags (3.1 3.2 3.3 3.4 3.5 3.6 3.9; default: all)");

    auto* factor_cmd =
        app.add_subcommand("factor", "factor a Gaussian integer into canonical primes");
    factor_cmd->fallthrough();
    std::string factor_arg;
    factor_cmd->add_option("value", factor_arg, "Gaussian literal, e.g. 60 or -9+12i")
        ->required();

    auto* gcd_cmd = app.add_subcommand("gcd", "canonical gcd of two Gaussian integers");
    gcd_cmd->fallthrough();
    std::string gcd_a, gcd_b;
    gcd_cmd->add_option("a", gcd_a, "first Gaussian literal")->required();
    gcd_cmd->add_option("b", gcd_b, "second Gaussian literal")->required();

    auto* resolvent_cmd = app.add_subcommand(
        "resolvent", "resolvent quadratic, discriminant, and reduction at (u, v)");
    resolvent_cmd->fallthrough();
    std::string res_u, res_v;
    resolvent_cmd->add_option("u", res_u, "Gaussian literal")->required();
    resolvent_cmd->add_option("v", res_v, "Gaussian literal")->required();

    auto* descent_cmd =
        app.add_subcommand("descent-check", "verify a descent-chain certificate");
    descent_cmd->fallthrough();
    std::string cert_path = "-";
    descent_cmd->add_option("file", cert_path, "certificate file ('-' reads stdin)")
        ->capture_default_str();

    auto* oracle_cmd =
        app.add_subcommand("oracle", "run the independent gcd and nu oracle suites");
    oracle_cmd->fallthrough();
    std::uint64_t gcd_norm_bound = 200, partition_bound = 10000, monotone_bound = 500;
    std::uint64_t oracle_seed = 20260825;
    std::size_t oracle_pairs = 10000;
    oracle_cmd->add_option("--gcd-norm-bound", gcd_norm_bound,
                           "exhaustive gcd comparison over all pairs with norm <= this")
        ->capture_default_str();
    oracle_cmd->add_option("--partition-norm-bound", partition_bound,
                           "check the nu-fiber partition for all norms <= this")
        ->capture_default_str();
    oracle_cmd->add_option("--monotone-norm-bound", monotone_bound,
                           "check strict nu monotonicity on divisors for all norms <= this")
        ->capture_default_str();
    oracle_cmd->add_option("--pairs", oracle_pairs, "random pairs for nu additivity")
        ->capture_default_str();
    oracle_cmd->add_option("--seed", oracle_seed, "RNG seed")->capture_default_str();

    auto* selftest_cmd = app.add_subcommand("selftest", "run all six property suites");
    selftest_cmd->fallthrough();
    std::uint64_t selftest_seed = 20260825;
    selftest_cmd->add_option("--seed", selftest_seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (search_cmd->parsed()) return run_search_cmd(g, include_imprimitive);
        if (verify_cmd->parsed()) return run_verify_cmd(g, tags);
        if (factor_cmd->parsed()) return run_factor_cmd(g, factor_arg);
        if (gcd_cmd->parsed()) return run_gcd_cmd(g, gcd_a, gcd_b);
        if (resolvent_cmd->parsed()) return run_resolvent_cmd(g, res_u, res_v);
        if (descent_cmd->parsed()) return run_descent_check_cmd(g, cert_path);
        if (oracle_cmd->parsed())
            return run_oracle_cmd(g, gcd_norm_bound, partition_bound, monotone_bound,
                                  oracle_pairs, oracle_seed);
        if (selftest_cmd->parsed()) return run_selftest_cmd(g, selftest_seed);
        std::cerr << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
