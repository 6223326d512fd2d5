#pragma once

/**
 * @file exact_arith.hpp
 * @brief Floating-point-free integer primitives and an exact rational type.
 *
 * Every floor expression used by the floor-sum primality indicator is reduced
 * to integer divisibility here, so no value in this library ever passes
 * through a binary floating-point quotient.
 */

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace floorprime {

using Natural = std::uint64_t;

/// r with r*r <= x < (r+1)*(r+1), by integer Newton iteration.
constexpr Natural isqrt(Natural x) noexcept {
    if (x < 2) return x;
    // Initial guess 2^ceil(bits/2) is always >= sqrt(x), so the iteration
    // decreases monotonically to the floor root.
    int bits = 64 - __builtin_clzll(x);
    Natural r = Natural{1} << ((bits + 1) / 2);
    while (true) {
        Natural next = (r + x / r) / 2;
        if (next >= r) return r;
        r = next;
    }
}

constexpr bool divides(Natural d, Natural x) {
    if (d == 0) throw std::invalid_argument("divides: divisor must be >= 1");
    return x % d == 0;
}

/// Exact value of floor(floor(x/d) - x/d): 0 when d | x, -1 otherwise.
constexpr int floor_term(Natural x, Natural d) {
    if (d == 0) throw std::invalid_argument("floor_term: divisor must be >= 1");
    return divides(d, x) ? 0 : -1;
}

/// Rational number kept in lowest terms with a positive denominator.
class ExactRatio {
public:
    constexpr ExactRatio() = default;
    constexpr ExactRatio(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    constexpr ExactRatio(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_integer() const { return den_ == 1; }

    /// Largest integer <= value.
    constexpr std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }

    constexpr ExactRatio operator-() const { return ExactRatio(-num_, den_); }

    friend constexpr ExactRatio operator+(ExactRatio a, ExactRatio b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend constexpr ExactRatio operator-(ExactRatio a, ExactRatio b) { return a + (-b); }
    friend constexpr ExactRatio operator*(ExactRatio a, ExactRatio b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend constexpr ExactRatio operator/(ExactRatio a, ExactRatio b) {
        if (b.num_ == 0) throw std::domain_error("ExactRatio: division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }

    friend constexpr bool operator==(ExactRatio a, ExactRatio b) = default;

    friend constexpr std::strong_ordering operator<=>(ExactRatio a, ExactRatio b) {
        // Denominators are positive, so cross-multiplication preserves order.
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, ExactRatio r) { return os << r.str(); }

private:
    static constexpr __int128 abs128(__int128 v) { return v < 0 ? -v : v; }

    static constexpr __int128 gcd128(__int128 a, __int128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static constexpr ExactRatio from_wide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("ExactRatio: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("ExactRatio: result exceeds 64-bit range");
        ExactRatio r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("ExactRatio: zero denominator");
        *this = from_wide(num_, den_);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace floorprime
