#pragma once

#include "resolvent.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace ziq {

// --- independent oracles -----------------------------------------------------

namespace oracle {

// nu from the rational factorization of the norm alone: each factor 2
// contributes 1 (ramified), each p = 1 mod 4 contributes its exponent
// (split), each p = 3 mod 4 contributes half its exponent (inert).
template <exact_integer I>
std::uint64_t nu_from_norm(const gint_t<I>& z) {
    if (z.is_zero()) throw std::invalid_argument("nu_from_norm: zero");
    std::uint64_t total = 0;
    for (const auto& [p, e] : factor_int(norm(z))) {
        if (p == I(2)) {
            total += e;
        } else if (mod_pos(p, I(4)) == I(1)) {
            total += e;
        } else {
            if (e % 2) throw std::logic_error("nu_from_norm: odd inert exponent");
            total += e / 2;
        }
    }
    return total;
}

// all nonzero z with norm(z) <= bound, in a fixed scan order
template <exact_integer I>
std::vector<gint_t<I>> elements_norm_up_to(std::uint64_t bound) {
    std::vector<gint_t<I>> out;
    const auto r = static_cast<long long>(std::sqrt(static_cast<double>(bound))) + 2;
    for (long long re = -r; re <= r; ++re)
        for (long long im = -r; im <= r; ++im) {
            if (!re && !im) continue;
            if (static_cast<std::uint64_t>(re * re + im * im) > bound) continue;
            out.emplace_back(I(re), I(im));
        }
    return out;
}

// gcd by exhaustive divisor intersection: the common canonical divisor of
// maximal norm. Independent of the Euclidean algorithm.
template <exact_integer I>
gint_t<I> gcd_by_divisors(const std::vector<gint_t<I>>& da, const std::vector<gint_t<I>>& db) {
    std::vector<gint_t<I>> common;
    auto key_less = [](const gint_t<I>& x, const gint_t<I>& y) {
        return std::make_tuple(norm(x), x.re, x.im) < std::make_tuple(norm(y), y.re, y.im);
    };
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common),
                          key_less);
    if (common.empty()) throw std::logic_error("gcd_by_divisors: no common divisor");
    return common.back();
}

} // namespace oracle

struct check_summary {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
    bool pass() const { return failures == 0; }
};

using gcd_fn = std::function<gint_t<big_int>(const gint_t<big_int>&, const gint_t<big_int>&)>;

// Exhaustive gcd comparison over all unordered pairs with norm <= bound.
inline check_summary oracle_gcd_exhaustive(std::uint64_t norm_bound, const gcd_fn& impl = {}) {
    using G = gint_t<big_int>;
    const auto elems = oracle::elements_norm_up_to<big_int>(norm_bound);
    std::vector<std::vector<G>> divs;
    divs.reserve(elems.size());
    for (const auto& z : elems) divs.push_back(divisors(factor(z)));
    const gcd_fn g = impl ? impl : [](const G& a, const G& b) { return gcd(a, b); };

    check_summary sum;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j) {
            const G expect = oracle::gcd_by_divisors(divs[i], divs[j]);
            const G got = g(elems[i], elems[j]);
            ++sum.checks;
            if (got != expect)
                sum.fail("gcd(" + to_string(elems[i]) + ", " + to_string(elems[j]) + ") = " +
                         to_string(got) + ", divisor oracle says " + to_string(expect));
        }
    return sum;
}

// nu additivity on random pairs, monoid laws on coset indices, strict
// monotonicity of nu on proper divisors, and the nu-fiber partition against
// the independent norm oracle.
inline check_summary oracle_nu_suite(std::uint64_t partition_norm_bound,
                                     std::uint64_t monotone_norm_bound, std::size_t random_pairs,
                                     std::uint64_t seed) {
    using G = gint_t<big_int>;
    check_summary sum;
    std::mt19937_64 rng(seed);
    auto small = [&](int m) { return static_cast<int>(rng() % (2 * m + 1)) - m; };
    auto random_nonzero = [&](int m) {
        G z;
        do
            z = G{big_int(small(m)), big_int(small(m))};
        while (z.is_zero());
        return z;
    };

    for (std::size_t k = 0; k < random_pairs; ++k) {
        const G a = random_nonzero(50), b = random_nonzero(50);
        ++sum.checks;
        if (nu(a * b) != nu(a) + nu(b))
            sum.fail("nu(ab) != nu(a)+nu(b) for a=" + to_string(a) + " b=" + to_string(b));
        ++sum.checks;
        if (!(coset_of(a * b) == coset_of(a) + coset_of(b)))
            sum.fail("coset_of(ab) != coset_of(a)+coset_of(b) for a=" + to_string(a) +
                     " b=" + to_string(b));
    }

    for (std::size_t k = 0; k < 1000; ++k) {
        const coset_index a{rng() % 1000000}, b{rng() % 1000000}, c{rng() % 1000000};
        ++sum.checks;
        if (!((a + b) + c == a + (b + c))) sum.fail("coset_index associativity");
        ++sum.checks;
        if (!(a + coset_identity() == a && coset_identity() + a == a))
            sum.fail("coset_index identity");
        ++sum.checks;
        if (!(a + b == b + a)) sum.fail("coset_index commutativity");
    }

    for (const auto& z : oracle::elements_norm_up_to<big_int>(monotone_norm_bound)) {
        const auto f = factor(z);
        const auto nz = f.total_multiplicity();
        const auto ds = divisors(f);
        for (std::size_t k = 0; k + 1 < ds.size(); ++k) { // last entry is z's associate
            ++sum.checks;
            if (!(nu(ds[k]) < nz))
                sum.fail("proper divisor " + to_string(ds[k]) + " of " + to_string(z) +
                         " does not drop nu");
        }
    }

    for (const auto& z : oracle::elements_norm_up_to<big_int>(partition_norm_bound)) {
        ++sum.checks;
        if (coset_of(z).n != oracle::nu_from_norm(z))
            sum.fail("coset_of(" + to_string(z) + ") disagrees with the norm oracle");
    }
    return sum;
}

// --- the six self-test suites -------------------------------------------------

struct selftest_options {
    std::uint64_t seed = 20260825;
    gcd_fn gcd_impl; // injectable for mutation testing; empty = built-in gcd
};

struct suite_result {
    std::string name;
    std::size_t checks = 0;
    bool pass = true;
    std::string detail;
};

struct selftest_report {
    std::vector<suite_result> suites;

    bool all_pass() const {
        for (const auto& s : suites)
            if (!s.pass) return false;
        return true;
    }
    std::string to_text() const {
        std::string out;
        for (const auto& s : suites) {
            out += std::string(s.pass ? "[PASS] " : "[FAIL] ") + s.name + " (" +
                   std::to_string(s.checks) + " checks)";
            if (!s.pass && !s.detail.empty()) out += ": " + s.detail;
            out += "\n";
        }
        out += std::string("selftest: ") + (all_pass() ? "PASS" : "FAIL") + "\n";
        return out;
    }
};

inline selftest_report run_selftest(const selftest_options& opt = {}) {
    using G = gint_t<big_int>;
    selftest_report rep;
    auto add = [&](const std::string& name, const check_summary& sum) {
        rep.suites.push_back({name, sum.checks, sum.pass(), sum.first_failure});
    };
    std::mt19937_64 rng(opt.seed);
    auto small = [&](int m) { return static_cast<int>(rng() % (2 * m + 1)) - m; };
    auto random_g = [&](int m) { return G{big_int(small(m)), big_int(small(m))}; };
    auto random_nonzero = [&](int m) {
        G z;
        do
            z = random_g(m);
        while (z.is_zero());
        return z;
    };

    add("gcd-oracle", oracle_gcd_exhaustive(40, opt.gcd_impl));
    add("nu-additivity", [&] {
        check_summary sum;
        for (int k = 0; k < 2000; ++k) {
            const G a = random_nonzero(40), b = random_nonzero(40);
            ++sum.checks;
            if (nu(a * b) != nu(a) + nu(b))
                sum.fail("a=" + to_string(a) + " b=" + to_string(b));
            ++sum.checks;
            if (nu(a) != oracle::nu_from_norm(a)) sum.fail("norm oracle: a=" + to_string(a));
        }
        return sum;
    }());
    add("monoid-laws", [&] {
        check_summary sum;
        for (int k = 0; k < 1000; ++k) {
            const coset_index a{rng() % 1000000}, b{rng() % 1000000}, c{rng() % 1000000};
            ++sum.checks;
            if (!((a + b) + c == a + (b + c) && a + b == b + a && a + coset_identity() == a))
                sum.fail("index laws");
            const G x = random_nonzero(30), y = random_nonzero(30);
            ++sum.checks;
            if (!(coset_of(x * y) == coset_of(x) + coset_of(y)))
                sum.fail("coset_of multiplicativity: x=" + to_string(x) + " y=" + to_string(y));
            ++sum.checks;
            if (in_G(x) && in_G(y) && !in_G(x * y))
                sum.fail("G not closed: x=" + to_string(x) + " y=" + to_string(y));
        }
        return sum;
    }());
    add("parametrization-completeness", [&] {
        check_summary sum;
        const conic_form<big_int> form{G{big_int(1)}, conic_variant::rhs_square};
        for (const auto& t : brute_force_conic(form, 8)) {
            if (is_odd(G(t.x * t.y))) continue; // the family covers xy even
            ++sum.checks;
            if (!match_pythagorean(t))
                sum.fail("unmatched triple " + to_string(t.x) + ", " + to_string(t.y) + ", " +
                         to_string(t.z));
        }
        return sum;
    }());
    add("discriminant-identity", [&] {
        check_summary sum;
        for (quartic_id id : {quartic_id::mordell, quartic_id::mordell_neg, quartic_id::mordell_2i,
                              quartic_id::mordell_2i_neg}) {
            const auto eq = make_equation<big_int>(id);
            for (int k = 0; k < 500; ++k) {
                const G u = random_g(50), v = random_g(50);
                ++sum.checks;
                try {
                    resolvent_discriminant(eq, u, v); // identity-checked inside
                } catch (const std::exception& e) {
                    sum.fail(std::string(e.what()) + " at u=" + to_string(u) +
                             " v=" + to_string(v));
                }
            }
        }
        return sum;
    }());
    add("round-trips", [&] {
        check_summary sum;
        for (int k = 0; k < 2000; ++k) {
            const G z = random_g(1000);
            ++sum.checks;
            if (parse_gint<big_int>(to_string(z)) != z) sum.fail("parse/print: " + to_string(z));
        }
        {
            descent_certificate<big_int> cert;
            std::mt19937_64 crng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
            auto csmall = [&] { return static_cast<int>(crng() % 41) - 20; };
            for (int k = 0; k < 8; ++k) {
                cert.chain.push_back({G{big_int(csmall()), big_int(csmall())},
                                      G{big_int(csmall()), big_int(csmall())},
                                      G{big_int(csmall()), big_int(csmall())},
                                      G{big_int(csmall()), big_int(csmall())},
                                      G{big_int(1)}});
                cert.indices.push_back({crng() % 100});
            }
            const std::string text = serialize_certificate(cert);
            ++sum.checks;
            if (serialize_certificate(parse_certificate<big_int>(text)) != text)
                sum.fail("certificate serialize/parse round-trip");
        }
        {
            // half-sum identities on every square-discriminant point in a box
            const auto eq = make_equation<big_int>(quartic_id::mordell);
            const auto rp = resolvent_params_for(eq);
            for (int ur = -6; ur <= 6; ++ur)
                for (int ui = -6; ui <= 6; ++ui)
                    for (int vr = -6; vr <= 6; ++vr)
                        for (int vi = -6; vi <= 6; ++vi) {
                            const G u{big_int(ur), big_int(ui)}, v{big_int(vr), big_int(vi)};
                            if (u.is_zero() || v.is_zero() || !coprime(u, v)) continue;
                            const auto d = exact_sqrt(resolvent_discriminant(eq, u, v));
                            if (!d) continue;
                            const auto out = reduce_quartic(eq, u, v, *d);
                            ++sum.checks;
                            if (out.u_half + out.v_half != *d ||
                                out.u_half * out.v_half != rp->mu * sq(G(u * v)))
                                sum.fail("half-sum identities at u=" + to_string(u) +
                                         " v=" + to_string(v));
                        }
        }
        return sum;
    }());
    return rep;
}

} // namespace ziq
