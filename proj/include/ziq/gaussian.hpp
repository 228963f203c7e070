#pragma once

#include "intops.hpp"

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace ziq {

// Gaussian integer re + im*i over an exact integer backend I.
template <exact_integer I>
struct gint_t {
    I re{};
    I im{};

    gint_t() = default;
    gint_t(I r) : re(std::move(r)) {}
    gint_t(I r, I i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend gint_t operator+(const gint_t& a, const gint_t& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend gint_t operator-(const gint_t& a, const gint_t& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend gint_t operator*(const gint_t& a, const gint_t& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    gint_t operator-() const { return {-re, -im}; }
    friend bool operator==(const gint_t& a, const gint_t& b) = default;

    gint_t& operator+=(const gint_t& o) { return *this = *this + o; }
    gint_t& operator-=(const gint_t& o) { return *this = *this - o; }
    gint_t& operator*=(const gint_t& o) { return *this = *this * o; }
};

using gint = gint_t<big_int>;

template <exact_integer I>
I norm(const gint_t<I>& z) {
    return z.re * z.re + z.im * z.im;
}

template <exact_integer I>
gint_t<I> conj(const gint_t<I>& z) {
    return {z.re, -z.im};
}

// z * i^k for any k (reduced mod 4).
template <exact_integer I>
gint_t<I> mul_i(const gint_t<I>& z, int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return z;
        case 1: return {-z.im, z.re};
        case 2: return -z;
        default: return {z.im, -z.re};
    }
}

template <exact_integer I>
bool is_unit(const gint_t<I>& z) {
    return norm(z) == 1;
}

// Odd <=> not divisible by 1+i <=> re+im odd.
template <exact_integer I>
bool is_odd(const gint_t<I>& z) {
    return !int_is_even(I(z.re + z.im));
}

template <exact_integer I>
bool is_even(const gint_t<I>& z) {
    return int_is_even(I(z.re + z.im));
}

// Lexicographic (re, im) order; used only to fix deterministic output orders.
template <exact_integer I>
bool lex_less(const gint_t<I>& a, const gint_t<I>& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

// Quotient and remainder with norm(r) <= norm(w)/2: each coordinate of z/w is
// rounded to the nearest integer, ties toward -infinity.
template <exact_integer I>
std::pair<gint_t<I>, gint_t<I>> div_rem(const gint_t<I>& z, const gint_t<I>& w) {
    if (w.is_zero()) throw std::invalid_argument("div_rem: division by zero");
    const I d = norm(w);
    const gint_t<I> t = z * conj(w); // z/w = t/d exactly
    auto round_half_down = [&](const I& n) {
        // nearest integer to n/d with ties toward -infinity: ceil((2n-d)/(2d))
        return ceil_div_pos(I(2 * n - d), I(2 * d));
    };
    gint_t<I> q{round_half_down(t.re), round_half_down(t.im)};
    gint_t<I> r = z - q * w;
    return {q, r};
}

template <exact_integer I>
bool divides(const gint_t<I>& w, const gint_t<I>& z) {
    if (w.is_zero()) return z.is_zero();
    const I d = norm(w);
    const gint_t<I> t = z * conj(w);
    return t.re % d == 0 && t.im % d == 0;
}

template <exact_integer I>
gint_t<I> exact_div(const gint_t<I>& z, const gint_t<I>& w) {
    if (w.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    const I d = norm(w);
    const gint_t<I> t = z * conj(w);
    if (t.re % d != 0 || t.im % d != 0)
        throw std::invalid_argument("exact_div: not divisible");
    return {t.re / d, t.im / d};
}

// Power of i, the only units of Z[i]; exponent kept reduced mod 4.
struct unit_power {
    int k = 0;

    unit_power() = default;
    explicit unit_power(int e) : k(((e % 4) + 4) % 4) {}

    friend unit_power operator*(unit_power a, unit_power b) {
        return unit_power(a.k + b.k);
    }
    unit_power inverse() const { return unit_power(-k); }
    friend bool operator==(unit_power, unit_power) = default;

    template <exact_integer I>
    gint_t<I> value() const {
        return mul_i(gint_t<I>{I(1)}, k);
    }
};

template <exact_integer I>
gint_t<I> unit_value(unit_power u) {
    return mul_i(gint_t<I>{I(1)}, u.k);
}

// Primary: odd and congruent to 1 mod (1+i)^3. Exactly one associate of every
// odd z is primary; the only primary unit is 1.
template <exact_integer I>
bool is_primary(const gint_t<I>& z) {
    if (!is_odd(z)) return false;
    static const gint_t<I> m{I(-2), I(2)}; // (1+i)^3
    return divides(m, gint_t<I>{I(z.re - 1), z.im});
}

// z = i^k * (1+i)^a * (primary odd part); returns (i^k, (1+i)^a * primary part).
// The canonical associate has trivial unit part by construction.
template <exact_integer I>
std::pair<unit_power, gint_t<I>> canonical_associate(const gint_t<I>& z) {
    if (z.is_zero())
        throw std::invalid_argument("canonical_associate: zero has no associate");
    const gint_t<I> one_plus_i{I(1), I(1)};
    gint_t<I> odd = z;
    unsigned a = 0;
    while (is_even(odd)) {
        odd = exact_div(odd, one_plus_i);
        ++a;
    }
    for (int k = 0; k < 4; ++k) {
        gint_t<I> cand = mul_i(odd, -k);
        if (is_primary(cand)) {
            gint_t<I> c = cand;
            for (unsigned j = 0; j < a; ++j) c = c * one_plus_i;
            return {unit_power(k), c};
        }
    }
    throw std::logic_error("canonical_associate: no primary associate found");
}

template <exact_integer I>
bool is_canonical(const gint_t<I>& z) {
    return !z.is_zero() && canonical_associate(z).first == unit_power(0);
}

// Euclidean gcd, returned in canonical form. gcd(0,0) is undefined.
template <exact_integer I>
gint_t<I> gcd(gint_t<I> a, gint_t<I> b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd: both arguments zero");
    while (!b.is_zero()) {
        auto [q, r] = div_rem(a, b);
        a = b;
        b = r;
    }
    return canonical_associate(a).second;
}

template <exact_integer I>
bool coprime(const gint_t<I>& a, const gint_t<I>& b) {
    return is_unit(gcd(a, b));
}

// Square root in Z[i] if one exists. The returned root w has re > 0, or
// re == 0 and im >= 0; the other root is -w.
template <exact_integer I>
std::optional<gint_t<I>> exact_sqrt(const gint_t<I>& z) {
    if (z.is_zero()) return gint_t<I>{};
    const I nz = norm(z);
    I n = isqrt(nz);
    if (n * n != nz) return std::nullopt;
    // w = x+yi with x^2 = (n+re)/2, y^2 = (n-re)/2, sign(xy) = sign(im)
    I two_x2 = n + z.re;
    I two_y2 = n - z.re;
    if (!int_is_even(two_x2)) return std::nullopt;
    I x2 = two_x2 / 2, y2 = two_y2 / 2, x, y;
    if (!int_is_square(x2, &x) || !int_is_square(y2, &y)) return std::nullopt;
    gint_t<I> w{x, z.im < 0 ? I(-y) : y};
    if (w.re < 0 || (w.re == 0 && w.im < 0)) w = -w;
    if (w * w != z) return std::nullopt;
    return w;
}

template <exact_integer I>
bool is_square(const gint_t<I>& z) {
    return exact_sqrt(z).has_value();
}

template <exact_integer I>
I re_mod(const gint_t<I>& z, const I& m) {
    if (m <= 0) throw std::invalid_argument("re_mod: modulus must be positive");
    return mod_pos(z.re, m);
}

template <exact_integer I>
I im_mod(const gint_t<I>& z, const I& m) {
    if (m <= 0) throw std::invalid_argument("im_mod: modulus must be positive");
    return mod_pos(z.im, m);
}

template <exact_integer I>
gint_t<I> pow(gint_t<I> base, unsigned long exp) {
    gint_t<I> acc{I(1)};
    while (exp) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

template <exact_integer I>
gint_t<I> sq(const gint_t<I>& z) {
    return z * z;
}

// --- literal syntax: "a", "bi", "a+bi", "a-bi"; unit imaginary part may drop
// --- the digits ("i", "-i", "3+i"). No internal whitespace.

template <exact_integer I>
std::string to_string(const gint_t<I>& z) {
    if (z.is_zero()) return "0";
    std::string s;
    if (z.re != 0) s += int_to_string(z.re);
    if (z.im != 0) {
        if (z.im > 0 && z.re != 0) s += '+';
        if (z.im == 1)
            s += 'i';
        else if (z.im == -1)
            s += "-i";
        else
            s += int_to_string(z.im) + 'i';
    }
    return s;
}

template <exact_integer I>
std::ostream& operator<<(std::ostream& os, const gint_t<I>& z) {
    return os << to_string(z);
}

template <exact_integer I>
gint_t<I> parse_gint(std::string_view s) {
    const std::string_view input = s;
    auto fail = [&]() -> void {
        throw std::invalid_argument("parse_gint: bad literal '" + std::string(input) + "'");
    };
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) fail();

    std::size_t pos = 0;
    bool saw_re = false, saw_im = false;
    I re(0), im(0);
    bool first = true;
    while (pos < s.size()) {
        I sign(1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = I(-1);
            ++pos;
        } else if (!first) {
            fail(); // second term needs an explicit sign
        }
        std::size_t d0 = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        const bool has_digits = pos > d0;
        const bool imag = pos < s.size() && s[pos] == 'i';
        if (imag) ++pos;
        if (!has_digits && !imag) fail(); // bare sign
        I mag = has_digits ? int_from_digits<I>(s.substr(d0, (imag ? pos - 1 : pos) - d0))
                           : I(1);
        if (imag) {
            if (saw_im) fail();
            im = sign * mag;
            saw_im = true;
        } else {
            if (saw_re || saw_im) fail(); // real part must come first, once
            re = sign * mag;
            saw_re = true;
        }
        first = false;
    }
    return {re, im};
}

inline gint parse(std::string_view s) {
    return parse_gint<big_int>(s);
}

} // namespace ziq
