#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>
#include <sstream>

namespace ziq {

// Default integer backend. Any exact, overflow-safe signed integer type works
// (arbitrary precision, or a checked fixed-width type that throws on overflow).
// Plain built-in ints silently wrap and must not be used as a backend.
using big_int = boost::multiprecision::cpp_int;

template <class I>
concept exact_integer = requires(I a, I b) {
    { a + b } -> std::convertible_to<I>;
    { a - b } -> std::convertible_to<I>;
    { a * b } -> std::convertible_to<I>;
    { a / b } -> std::convertible_to<I>;
    { a % b } -> std::convertible_to<I>;
    { -a } -> std::convertible_to<I>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    I(0);
    I(137);
};

template <exact_integer I>
bool int_is_even(const I& n) {
    return n % 2 == 0;
}

// Floor division for d > 0 (backend division truncates toward zero).
template <exact_integer I>
I floor_div_pos(const I& n, const I& d) {
    I q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

template <exact_integer I>
I ceil_div_pos(const I& n, const I& d) {
    I q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

// Nonnegative residue in [0, m) for m > 0.
template <exact_integer I>
I mod_pos(const I& n, const I& m) {
    I r = n % m;
    if (r < 0) r += m;
    return r;
}

template <exact_integer I>
unsigned bit_length(I n) {
    if (n < 0) n = -n;
    unsigned bits = 0;
    while (n > 0) {
        n >>= 1;
        ++bits;
    }
    return bits;
}

// Floor of sqrt(n); Newton iteration from a power-of-two overestimate.
template <exact_integer I>
I isqrt(const I& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n < 2) return n;
    I x = I(1) << (bit_length(n) / 2 + 1);
    for (;;) {
        I y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

template <exact_integer I>
bool int_is_square(const I& n, I* root = nullptr) {
    if (n < 0) return false;
    I s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

template <exact_integer I>
std::string int_to_string(const I& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

template <exact_integer I>
I int_from_digits(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("int_from_digits: empty");
    I v(0);
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("int_from_digits: bad digit");
        v = v * 10 + (c - '0');
    }
    return v;
}

// Exact conversion to uint64 where possible; used to switch to native
// arithmetic in trial-division loops.
template <exact_integer I>
bool fits_u64(const I& n, std::uint64_t& out) {
    if (n < 0) return false;
    if constexpr (std::is_integral_v<I>) {
        out = static_cast<std::uint64_t>(n);
        return true;
    } else {
        if (n > I(std::numeric_limits<std::uint64_t>::max())) return false;
        out = static_cast<std::uint64_t>(n);
        return true;
    }
}

} // namespace ziq
