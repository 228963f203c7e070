#pragma once

#include "factor.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ziq {

// X^2 + eps*Y^2 = Z^2, or the zero form X^2 + eps*Y^2 + Z^2 = 0.
enum class conic_variant { rhs_square, zero_sum };

template <exact_integer I>
struct conic_form {
    gint_t<I> eps;
    conic_variant variant = conic_variant::rhs_square;
};

// eps catalog is closed-world: 1, i, 1+i and their negatives; anything else
// is a caller error, not a guess.
template <exact_integer I>
bool valid_eps(const gint_t<I>& e) {
    const I n = norm(e);
    return n == 1 ? e.im == 0 || e.re == 0 : (n == 2 && e.re == e.im);
}

template <exact_integer I>
void require_form(const conic_form<I>& f) {
    if (!valid_eps(f.eps))
        throw std::invalid_argument("conic_form: eps '" + to_string(f.eps) +
                                    "' outside the supported catalog");
}

template <exact_integer I>
struct param_pair {
    gint_t<I> P, Q;
    unit_power t;
};

template <exact_integer I>
struct triple {
    gint_t<I> x, y, z;
    friend bool operator==(const triple&, const triple&) = default;
};

template <exact_integer I>
bool triple_lex_less(const triple<I>& a, const triple<I>& b) {
    if (a.x != b.x) return lex_less(a.x, b.x);
    if (a.y != b.y) return lex_less(a.y, b.y);
    return lex_less(a.z, b.z);
}

// Solutions of X^2 + Y^2 = Z^2:
//   X = i^(t+1) (P^2 - (-1)^t Q^2), Y = (1+i)^2 P Q, Z = i^(t+1) (P^2 + (-1)^t Q^2)
// for coprime P, Q of opposite parity.
template <exact_integer I>
triple<I> pythagorean_param(const param_pair<I>& p) {
    if (p.P.is_zero() || p.Q.is_zero())
        throw std::invalid_argument("pythagorean_param: P, Q must be nonzero");
    if (!coprime(p.P, p.Q))
        throw std::invalid_argument("pythagorean_param: P, Q not coprime");
    if (is_odd(p.P) == is_odd(p.Q))
        throw std::invalid_argument("pythagorean_param: need PQ = 0 mod (1+i), P,Q not both even");
    const int t = p.t.k;
    const int sgn = t % 2 ? -1 : 1; // (-1)^t
    const gint_t<I> p2 = sq(p.P), q2 = mul_i(sq(p.Q), sgn == 1 ? 0 : 2);
    triple<I> r{mul_i(gint_t<I>(p2 - q2), t + 1),
                gint_t<I>{I(0), I(2)} * p.P * p.Q, // (1+i)^2 = 2i
                mul_i(gint_t<I>(p2 + q2), t + 1)};
    if (sq(r.x) + sq(r.y) != sq(r.z))
        throw std::logic_error("pythagorean_param: identity check failed");
    return r;
}

// Solutions of X^2 + eps Y^2 = Z^2 for eps in {i, 1+i}:
//   X = i^(1-t) (P^2 - (-1)^t eps Q^2), Y = (1+i)^2 P Q, Z = i^(1-t) (P^2 + (-1)^t eps Q^2)
// Parity side-conditions: eps=i needs PQ even; eps=1+i needs Q even.
template <exact_integer I>
triple<I> conic_param(const conic_form<I>& f, const param_pair<I>& p) {
    require_form(f);
    const gint_t<I> eps = f.eps;
    const bool eps_i = eps == gint_t<I>{I(0), I(1)};
    const bool eps_1pi = eps == gint_t<I>{I(1), I(1)};
    if (!eps_i && !eps_1pi)
        throw std::invalid_argument("conic_param: unsupported eps '" + to_string(eps) +
                                    "' (use pythagorean_param for eps=1)");
    if (p.P.is_zero() || p.Q.is_zero())
        throw std::invalid_argument("conic_param: P, Q must be nonzero");
    if (!coprime(p.P, p.Q))
        throw std::invalid_argument("conic_param: P, Q not coprime");
    if (eps_i && is_odd(p.P) && is_odd(p.Q))
        throw std::invalid_argument("conic_param: eps=i needs PQ = 0 mod (1+i)");
    if (eps_1pi && (is_odd(p.Q) || is_even(p.P)))
        throw std::invalid_argument("conic_param: eps=1+i needs P odd, Q = 0 mod (1+i)");
    const int t = p.t.k;
    const gint_t<I> eq2 = mul_i(gint_t<I>(eps * sq(p.Q)), t % 2 ? 2 : 0); // (-1)^t eps Q^2
    const gint_t<I> p2 = sq(p.P);
    triple<I> r{mul_i(gint_t<I>(p2 - eq2), 1 - t),
                gint_t<I>{I(0), I(2)} * p.P * p.Q,
                mul_i(gint_t<I>(p2 + eq2), 1 - t)};
    if (sq(r.x) + eps * sq(r.y) != sq(r.z))
        throw std::logic_error("conic_param: identity check failed");
    return r;
}

// Half-sum shapes from the X^4+Y^4=iZ^2 analysis:
//   A = i^t (P^2 -+ (-1)^t i Q^2)/(1+i),  B = i^(t+1) (P^2 +- (-1)^t i Q^2)/(1+i),
//   Gamma = i^((1-+1)/2) (1+i) P Q,
// sign=+1 takes the upper symbols, sign=-1 the lower (the branch that survives
// the unit case analysis is t=0, sign=-1). A and B are candidate squares:
// A^2 + B^2 = i Gamma^2 and 2AB = P^4 + Q^4 hold identically.
template <exact_integer I>
struct halfsum_triple {
    gint_t<I> a, b, gamma;
};

template <exact_integer I>
halfsum_triple<I> szabo_halfsum_param(const param_pair<I>& p, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("szabo_halfsum_param: sign must be +-1");
    if (p.P.is_zero() || p.Q.is_zero())
        throw std::invalid_argument("szabo_halfsum_param: P, Q must be nonzero");
    if (!is_odd(p.P) || !is_odd(p.Q))
        throw std::invalid_argument("szabo_halfsum_param: P, Q must be odd");
    if (!coprime(p.P, p.Q))
        throw std::invalid_argument("szabo_halfsum_param: P, Q not coprime");
    const int t = p.t.k;
    const gint_t<I> one_plus_i{I(1), I(1)};
    const gint_t<I> iq2 = mul_i(mul_i(sq(p.Q), 1), t % 2 ? 2 : 0); // (-1)^t i Q^2
    const gint_t<I> p2 = sq(p.P);
    const gint_t<I> num_a = sign == 1 ? gint_t<I>(p2 - iq2) : gint_t<I>(p2 + iq2);
    const gint_t<I> num_b = sign == 1 ? gint_t<I>(p2 + iq2) : gint_t<I>(p2 - iq2);
    if (!divides(one_plus_i, num_a) || !divides(one_plus_i, num_b))
        throw std::invalid_argument("szabo_halfsum_param: numerators not divisible by 1+i");
    halfsum_triple<I> r{mul_i(exact_div(num_a, one_plus_i), t),
                        mul_i(exact_div(num_b, one_plus_i), t + 1),
                        mul_i(gint_t<I>(one_plus_i * p.P * p.Q), sign == 1 ? 0 : 1)};
    if (sq(r.a) + sq(r.b) != mul_i(sq(r.gamma), 1))
        throw std::logic_error("szabo_halfsum_param: A^2+B^2 = i Gamma^2 failed");
    const gint_t<I> p4 = sq(p2), q4 = sq(sq(p.Q));
    if (gint_t<I>(I(2)) * r.a * r.b != mul_i(gint_t<I>(p4 + q4), t % 2 ? 2 : 0))
        throw std::logic_error("szabo_halfsum_param: 2AB = +-(P^4+Q^4) failed");
    return r;
}

// --- residue obstructions -------------------------------------------------
//
// Each case checks one congruence contradiction from the unit case analyses:
// an expression that a putative solution would force to 0 is evaluated over
// every residue class of its constrained variables, and the attained residues
// are collected. The case is impossible iff 0 is never attained.

enum class obstruction_case {
    fermat_t0,        // re(a^2 - i(P^4 - Q^4)) mod 4, a,P primary-class, Q even
    fermat_t1,        // re(a^2 + P^4 + Q^4) mod 4
    fermat_t2,        // re(a^2 + i(P^4 - Q^4)) mod 4
    szabo_parity,     // re(i(m^2 +- n^2) - s(m'^2 +- n'^2)) mod 2
    one_plus_i_parity,// same with (1+i)-weighted squares
    trivial           // modulus-1 placeholder: no obstruction
};

inline const char* obstruction_name(obstruction_case c) {
    switch (c) {
        case obstruction_case::fermat_t0: return "fermat_t0";
        case obstruction_case::fermat_t1: return "fermat_t1";
        case obstruction_case::fermat_t2: return "fermat_t2";
        case obstruction_case::szabo_parity: return "szabo_parity";
        case obstruction_case::one_plus_i_parity: return "one_plus_i_parity";
        case obstruction_case::trivial: return "trivial";
    }
    return "?";
}

struct obstruction_report {
    std::string case_name;
    std::string expression;     // the quantity a solution would force to 0
    unsigned residue_modulus;   // modulus of the reported residues
    std::size_t classes_checked;
    std::vector<unsigned> attained; // sorted distinct residues of the expression
    bool impossible;                // true iff 0 is never attained
};

namespace detail {

template <exact_integer I>
std::vector<gint_t<I>> residue_classes(int modulus, bool (*keep)(const gint_t<I>&)) {
    std::vector<gint_t<I>> out;
    for (int a = 0; a < modulus; ++a)
        for (int b = 0; b < modulus; ++b) {
            gint_t<I> z{I(a), I(b)};
            if (keep(z)) out.push_back(z);
        }
    return out;
}

template <exact_integer I>
bool keep_primary(const gint_t<I>& z) { return is_primary(z); }
template <exact_integer I>
bool keep_odd(const gint_t<I>& z) { return is_odd(z); }
template <exact_integer I>
bool keep_even(const gint_t<I>& z) { return is_even(z); }

} // namespace detail

template <exact_integer I>
obstruction_report residue_obstruction(const conic_form<I>& f, obstruction_case c) {
    require_form(f);
    const gint_t<I> one{I(1)};
    const gint_t<I> one_plus_i{I(1), I(1)};
    const bool eps_one = f.eps == one;
    const bool eps_1pi = f.eps == one_plus_i;
    obstruction_report rep;
    rep.case_name = obstruction_name(c);
    std::set<unsigned> seen;

    auto finish = [&](unsigned modulus, std::size_t checked, const char* expr) {
        rep.expression = expr;
        rep.residue_modulus = modulus;
        rep.classes_checked = checked;
        rep.attained.assign(seen.begin(), seen.end());
        rep.impossible = !seen.count(0u);
        return rep;
    };

    switch (c) {
        case obstruction_case::trivial:
            seen.insert(0u);
            rep = obstruction_report{};
            rep.case_name = obstruction_name(c);
            rep.expression = "0 mod 1";
            rep.residue_modulus = 1;
            rep.classes_checked = 1;
            rep.attained = {0u};
            rep.impossible = false;
            return rep;

        case obstruction_case::fermat_t0:
        case obstruction_case::fermat_t1:
        case obstruction_case::fermat_t2: {
            if (!eps_one)
                throw std::invalid_argument("residue_obstruction: fermat cases need eps=1");
            // alpha^2 = i^(t+1)(P^4 - (-1)^t Q^4) with alpha, P primary, Q even;
            // the forced-zero expression is alpha^2 - i^(t+1)(P^4 - (-1)^t Q^4).
            const int t = c == obstruction_case::fermat_t0 ? 0
                        : c == obstruction_case::fermat_t1 ? 1 : 2;
            const auto alphas = detail::residue_classes<I>(8, detail::keep_primary<I>);
            const auto ps = detail::residue_classes<I>(8, detail::keep_odd<I>);
            const auto qs = detail::residue_classes<I>(8, detail::keep_even<I>);
            std::size_t checked = 0;
            for (const auto& a : alphas)
                for (const auto& p : ps)
                    for (const auto& q : qs) {
                        gint_t<I> q4 = mul_i(pow(q, 4), t % 2 ? 2 : 0);
                        gint_t<I> rhs = mul_i(gint_t<I>(pow(p, 4) - q4), t + 1);
                        gint_t<I> e = sq(a) - rhs;
                        seen.insert(static_cast<unsigned>(re_mod(e, I(4))));
                        ++checked;
                    }
            const char* expr = t == 0 ? "re(a^2 - i(P^4 - Q^4)) mod 4"
                             : t == 1 ? "re(a^2 + P^4 + Q^4) mod 4"
                                      : "re(a^2 + i(P^4 - Q^4)) mod 4";
            return finish(4, checked, expr);
        }

        case obstruction_case::szabo_parity: {
            if (!eps_one)
                throw std::invalid_argument("residue_obstruction: szabo_parity needs eps=1");
            // i(m^2 + (-1)^s n^2) = m'^2 + (-1)^s n'^2 is impossible: the left
            // real part is even, the right is odd (n, n' odd; m, m' even).
            const auto evens = detail::residue_classes<I>(4, detail::keep_even<I>);
            const auto odds = detail::residue_classes<I>(4, detail::keep_odd<I>);
            std::size_t checked = 0;
            for (int s = 0; s < 2; ++s)
                for (int sg = 0; sg < 2; ++sg)
                    for (const auto& m : evens)
                        for (const auto& n : odds)
                            for (const auto& mp : evens)
                                for (const auto& np : odds) {
                                    gint_t<I> l = mul_i(gint_t<I>(sq(m) + mul_i(sq(n), 2 * s)), 1);
                                    gint_t<I> r = sq(mp) + mul_i(sq(np), 2 * s);
                                    gint_t<I> e = l - mul_i(r, 2 * sg);
                                    seen.insert(static_cast<unsigned>(re_mod(e, I(2))));
                                    ++checked;
                                }
            return finish(2, checked, "re(i(m^2 +- n^2) -+ (m'^2 +- n'^2)) mod 2");
        }

        case obstruction_case::one_plus_i_parity: {
            if (!eps_1pi)
                throw std::invalid_argument("residue_obstruction: one_plus_i_parity needs eps=1+i");
            const auto evens = detail::residue_classes<I>(4, detail::keep_even<I>);
            const auto odds = detail::residue_classes<I>(4, detail::keep_odd<I>);
            std::size_t checked = 0;
            for (int s = 0; s < 2; ++s)
                for (int sg = 0; sg < 2; ++sg)
                    for (const auto& m : evens)
                        for (const auto& n : odds)
                            for (const auto& mp : evens)
                                for (const auto& np : odds) {
                                    gint_t<I> wm = one_plus_i * sq(m);
                                    gint_t<I> wmp = one_plus_i * sq(mp);
                                    gint_t<I> l = mul_i(gint_t<I>(sq(n) + mul_i(wm, 2 * s)), 1);
                                    gint_t<I> r = sq(np) + mul_i(wmp, 2 * s);
                                    gint_t<I> e = l - mul_i(r, 2 * sg);
                                    seen.insert(static_cast<unsigned>(re_mod(e, I(2))));
                                    ++checked;
                                }
            return finish(2, checked, "re(i(n^2 +- (1+i)m^2) -+ (n'^2 +- (1+i)m'^2)) mod 2");
        }
    }
    throw std::invalid_argument("residue_obstruction: unknown case");
}

// --- brute-force oracle ----------------------------------------------------

// All primitive (X,Y,Z) with the box bound on X and Y, Z recovered exactly.
// Lexicographic order in (x, y, z); both signs of Z are emitted.
template <exact_integer I>
std::vector<triple<I>> brute_force_conic(const conic_form<I>& f, int bound,
                                         int max_bound = 50) {
    require_form(f);
    if (bound < 0) throw std::invalid_argument("brute_force_conic: negative bound");
    if (bound > max_bound)
        throw std::domain_error("brute_force_conic: bound " + std::to_string(bound) +
                                " exceeds budget " + std::to_string(max_bound));
    std::vector<triple<I>> out;
    for (int xr = -bound; xr <= bound; ++xr)
        for (int xi = -bound; xi <= bound; ++xi) {
            const gint_t<I> x{I(xr), I(xi)};
            if (x.is_zero()) continue;
            for (int yr = -bound; yr <= bound; ++yr)
                for (int yi = -bound; yi <= bound; ++yi) {
                    const gint_t<I> y{I(yr), I(yi)};
                    if (y.is_zero()) continue;
                    gint_t<I> w = sq(x) + f.eps * sq(y);
                    if (f.variant == conic_variant::zero_sum) w = -w;
                    if (w.is_zero()) continue;
                    auto z = exact_sqrt(w);
                    if (!z) continue;
                    if (!coprime(x, y)) continue;
                    out.push_back({x, y, *z});
                    out.push_back({x, y, -*z});
                }
        }
    std::sort(out.begin(), out.end(), triple_lex_less<I>);
    return out;
}

// --- unit-orbit matching against the parametrizations ----------------------

namespace detail {

// Equation-preserving unit substitutions (x,y,z) -> (i^a x, i^b y, i^c z)
// need a = b = c mod 2; optionally x<->y swap for the symmetric eps=1 form.
template <exact_integer I>
std::vector<triple<I>> conic_orbit(const triple<I>& t, bool allow_swap) {
    std::vector<triple<I>> out;
    for (int a = 0; a < 4; ++a)
        for (int b = a % 2; b < 4; b += 2)
            for (int c = a % 2; c < 4; c += 2) {
                triple<I> s{mul_i(t.x, a), mul_i(t.y, b), mul_i(t.z, c)};
                out.push_back(s);
                if (allow_swap) out.push_back({s.y, s.x, s.z});
            }
    return out;
}

} // namespace detail

// Search for (P,Q,t) whose pythagorean_param output lies in the unit orbit
// of the given triple. Constructive: P^2 and Q^2 are read off the half-sums
// of X and Z, so no parameter-space scan is needed.
template <exact_integer I>
std::optional<param_pair<I>> match_pythagorean(const triple<I>& tr) {
    const gint_t<I> two{I(2)};
    for (const auto& s : detail::conic_orbit(tr, true)) {
        for (int t = 0; t < 4; ++t) {
            const gint_t<I> p2c = mul_i(gint_t<I>(s.x + s.z), -(t + 1));
            const gint_t<I> q2c = mul_i(mul_i(gint_t<I>(s.z - s.x), -(t + 1)), t % 2 ? 2 : 0);
            if (!divides(two, p2c) || !divides(two, q2c)) continue;
            auto P = exact_sqrt(exact_div(p2c, two));
            auto Q = exact_sqrt(exact_div(q2c, two));
            if (!P || !Q || P->is_zero() || Q->is_zero()) continue;
            param_pair<I> pp{*P, *Q, unit_power(t)};
            for (int flip = 0; flip < 2; ++flip, pp.Q = -pp.Q) {
                if (!coprime(pp.P, pp.Q) || is_odd(pp.P) == is_odd(pp.Q)) continue;
                triple<I> gen = pythagorean_param(pp);
                if (gen.x == s.x && gen.y == s.y && gen.z == s.z) return pp;
            }
        }
    }
    return std::nullopt;
}

template <exact_integer I>
std::optional<param_pair<I>> match_conic(const conic_form<I>& f, const triple<I>& tr) {
    require_form(f);
    const gint_t<I> two{I(2)};
    for (const auto& s : detail::conic_orbit(tr, false)) {
        for (int t = 0; t < 4; ++t) {
            const gint_t<I> p2c = mul_i(gint_t<I>(s.x + s.z), t - 1);
            const gint_t<I> eq2c = mul_i(mul_i(gint_t<I>(s.z - s.x), t - 1), t % 2 ? 2 : 0);
            if (!divides(two, p2c) || !divides(two, eq2c)) continue;
            const gint_t<I> eq2 = exact_div(eq2c, two);
            if (!divides(f.eps, eq2)) continue;
            auto P = exact_sqrt(exact_div(p2c, two));
            auto Q = exact_sqrt(exact_div(eq2, f.eps));
            if (!P || !Q || P->is_zero() || Q->is_zero()) continue;
            param_pair<I> pp{*P, *Q, unit_power(t)};
            for (int flip = 0; flip < 2; ++flip, pp.Q = -pp.Q) {
                try {
                    triple<I> gen = conic_param(f, pp);
                    if (gen.x == s.x && gen.y == s.y && gen.z == s.z) return pp;
                } catch (const std::invalid_argument&) {
                    // parity/coprimality precondition failed; not a family member
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace ziq
