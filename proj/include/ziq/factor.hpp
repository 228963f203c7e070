#pragma once

#include "gaussian.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ziq {

// --- rational integer helpers (trial division range) ---

template <exact_integer I>
std::vector<std::pair<I, unsigned>> factor_int(I n) {
    if (n <= 0) throw std::invalid_argument("factor_int: argument must be positive");
    std::vector<std::pair<I, unsigned>> out;
    std::uint64_t nn = 0;
    if (fits_u64(n, nn)) {
        // native path
        auto push = [&](std::uint64_t p, unsigned e) { out.emplace_back(I(p), e); };
        for (std::uint64_t d : {std::uint64_t(2), std::uint64_t(3)}) {
            unsigned e = 0;
            while (nn % d == 0) nn /= d, ++e;
            if (e) push(d, e);
        }
        for (std::uint64_t d = 5; d * d <= nn; d += 6) {
            for (std::uint64_t c : {d, d + 2}) {
                unsigned e = 0;
                while (nn % c == 0) nn /= c, ++e;
                if (e) push(c, e);
            }
        }
        if (nn > 1) push(nn, 1);
        return out;
    }
    for (I d(2); d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) n /= d, ++e;
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

template <exact_integer I>
bool is_prime_int(const I& n) {
    if (n < 2) return false;
    auto f = factor_int(n);
    return f.size() == 1 && f[0].second == 1;
}

// Decompose a rational prime p = 1 mod 4 as a^2 + b^2, 0 < a < b.
template <exact_integer I>
std::pair<I, I> sum_two_squares(const I& p) {
    for (I a(1); a * a * 2 < p; ++a) {
        I b2 = p - a * a, b;
        if (int_is_square(b2, &b)) return {a, b};
    }
    throw std::logic_error("sum_two_squares: no decomposition (argument not a 1 mod 4 prime?)");
}

// --- Gaussian primes and factorization ---

template <exact_integer I>
bool is_gaussian_prime(const gint_t<I>& p) {
    const I n = norm(p);
    if (n < 2) return false;
    if (is_prime_int(n)) return true; // ramified or split
    I q;
    if (!int_is_square(n, &q)) return false;
    if (mod_pos(q, I(4)) != 3 || !is_prime_int(q)) return false;
    return p.re == 0 || p.im == 0; // associate of the inert rational prime q
}

template <exact_integer I>
struct prime_power {
    gint_t<I> p;
    unsigned e = 0;
    friend bool operator==(const prime_power&, const prime_power&) = default;
};

template <exact_integer I>
struct factorization {
    unit_power unit;
    std::vector<prime_power<I>> primes; // canonical primes, sorted by (norm, re, im)

    gint_t<I> value() const {
        gint_t<I> v = unit_value<I>(unit);
        for (const auto& [p, e] : primes) v *= pow(p, e);
        return v;
    }

    std::uint64_t total_multiplicity() const {
        std::uint64_t s = 0;
        for (const auto& pp : primes) s += pp.e;
        return s;
    }
};

inline constexpr std::uint64_t default_factor_budget = 1'000'000'000'000ull;

// Factor z into unit * canonical primes. Cost is trial division of norm(z),
// so norms above the budget are rejected rather than left to spin.
template <exact_integer I>
factorization<I> factor(const gint_t<I>& z, const I& norm_budget = I(default_factor_budget)) {
    if (z.is_zero()) throw std::invalid_argument("factor: zero");
    const I n = norm(z);
    if (n > norm_budget)
        throw std::domain_error("factor: norm " + int_to_string(n) + " exceeds budget " +
                                int_to_string(norm_budget));

    factorization<I> f;
    const gint_t<I> one_plus_i{I(1), I(1)};
    for (const auto& [p, k] : factor_int(n)) {
        if (p == 2) {
            // norm (1+i)^e * odd has 2-adic valuation exactly e
            f.primes.push_back({one_plus_i, k});
        } else if (mod_pos(p, I(4)) == 3) {
            // inert; appears in the norm with even multiplicity
            f.primes.push_back({canonical_associate(gint_t<I>{p}).second, k / 2});
        } else {
            auto [a, b] = sum_two_squares(p);
            gint_t<I> pi = canonical_associate(gint_t<I>{a, b}).second;
            gint_t<I> pibar = canonical_associate(conj(pi)).second;
            unsigned e = 0;
            gint_t<I> w = z;
            while (divides(pi, w)) {
                w = exact_div(w, pi);
                ++e;
            }
            if (e) f.primes.push_back({pi, e});
            if (k > e) f.primes.push_back({pibar, k - e});
        }
    }
    std::sort(f.primes.begin(), f.primes.end(), [](const auto& x, const auto& y) {
        const I nx = norm(x.p), ny = norm(y.p);
        if (nx != ny) return nx < ny;
        return lex_less(x.p, y.p);
    });

    gint_t<I> rest = z;
    for (const auto& [p, e] : f.primes) rest = exact_div(rest, pow(p, e));
    for (int k = 0; k < 4; ++k) {
        if (rest == unit_value<I>(unit_power(k))) {
            f.unit = unit_power(k);
            if (f.value() != z) throw std::logic_error("factor: reconstruction mismatch");
            return f;
        }
    }
    throw std::logic_error("factor: non-unit cofactor left over");
}

// Factorization of the product from factorizations of the parts; avoids
// re-factoring large norms when the parts are already known.
template <exact_integer I>
factorization<I> factorization_mul(const factorization<I>& a, const factorization<I>& b) {
    factorization<I> out;
    out.unit = a.unit * b.unit;
    std::size_t i = 0, j = 0;
    auto before = [](const prime_power<I>& x, const prime_power<I>& y) {
        const I nx = norm(x.p), ny = norm(y.p);
        if (nx != ny) return nx < ny;
        return lex_less(x.p, y.p);
    };
    while (i < a.primes.size() || j < b.primes.size()) {
        if (j == b.primes.size() || (i < a.primes.size() && before(a.primes[i], b.primes[j])))
            out.primes.push_back(a.primes[i++]);
        else if (i == a.primes.size() || before(b.primes[j], a.primes[i]))
            out.primes.push_back(b.primes[j++]);
        else {
            out.primes.push_back({a.primes[i].p, a.primes[i].e + b.primes[j].e});
            ++i, ++j;
        }
    }
    return out;
}

template <exact_integer I>
factorization<I> factorization_pow(factorization<I> f, unsigned k) {
    if (k == 0) return factorization<I>{};
    unit_power u;
    for (unsigned j = 0; j < k; ++j) u = u * f.unit;
    f.unit = u;
    for (auto& pp : f.primes) pp.e *= k;
    return f;
}

// Multiplicity of the prime p in z (any associate of p gives the same answer).
template <exact_integer I>
unsigned nu_p(const gint_t<I>& z, const gint_t<I>& p) {
    if (z.is_zero()) throw std::invalid_argument("nu_p: zero");
    if (!is_gaussian_prime(p))
        throw std::invalid_argument("nu_p: '" + to_string(p) + "' is not prime");
    unsigned e = 0;
    gint_t<I> w = z;
    while (divides(p, w)) {
        w = exact_div(w, p);
        ++e;
    }
    return e;
}

// --- the coset monoid: nonzero z up to units and prime permutation is
// --- classified by its total multiplicity; fibers multiply by adding indices.

struct coset_index {
    std::uint64_t n = 0;

    friend coset_index operator+(coset_index a, coset_index b) { return {a.n + b.n}; }
    friend auto operator<=>(coset_index, coset_index) = default;
};

inline coset_index coset_identity() {
    return {0}; // the units
}

template <exact_integer I>
std::uint64_t nu(const gint_t<I>& z, const I& norm_budget = I(default_factor_budget)) {
    if (z.is_zero()) throw std::invalid_argument("nu: zero");
    return factor(z, norm_budget).total_multiplicity();
}

template <exact_integer I>
coset_index coset_of(const gint_t<I>& z, const I& norm_budget = I(default_factor_budget)) {
    return {nu(z, norm_budget)};
}

// Membership in the unit-free fundamental domain G: one representative per
// associate class, i.e. the canonical form itself.
template <exact_integer I>
bool in_G(const gint_t<I>& z) {
    if (z.is_zero()) return false;
    return canonical_associate(z).first == unit_power(0);
}

// All canonical divisors of the factored value (1 included, value included).
template <exact_integer I>
std::vector<gint_t<I>> divisors(const factorization<I>& f,
                                std::size_t count_budget = (1u << 20)) {
    std::size_t total = 1;
    for (const auto& pp : f.primes) {
        total *= pp.e + 1;
        if (total > count_budget)
            throw std::domain_error("divisors: count exceeds budget");
    }
    std::vector<gint_t<I>> out{gint_t<I>{I(1)}};
    out.reserve(total);
    for (const auto& [p, e] : f.primes) {
        const std::size_t base = out.size();
        gint_t<I> pk{I(1)};
        for (unsigned j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        const I nx = norm(x), ny = norm(y);
        if (nx != ny) return nx < ny;
        return lex_less(x, y);
    });
    return out;
}

} // namespace ziq
