#include "floorprime/prime_locate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "floorprime/prime_count.hpp"
#include "floorprime/s_test.hpp"

namespace floorprime {

std::string_view to_string(GateVariant v) {
    return v == GateVariant::a ? "a" : "b";
}

std::int64_t gate_a_unguarded(Natural n, Natural x) {
    if (n == 0) throw std::invalid_argument("gate: n must be >= 1");
    return 1 - static_cast<std::int64_t>(x / n);
}

Natural gate(Natural n, Natural x, GateVariant variant) {
    if (n == 0) throw std::invalid_argument("gate: n must be >= 1");
    if (variant == GateVariant::a) {
        if (x >= 2 * n)
            throw gate_domain_error("gate A evaluated at x = " + std::to_string(x) + " >= 2n = " +
                                    std::to_string(2 * n));
        return static_cast<Natural>(gate_a_unguarded(n, x));
    }
    return (2 * n) / (x + n + 1);
}

Natural nth_bound(Natural n) {
    if (n == 0) throw std::invalid_argument("nth_bound: n must be >= 1");
    long double v = static_cast<long double>(n) * std::log(static_cast<long double>(n));
    long double whole = std::floor(v);
    long double frac = v - whole;
    Natural floor_nlogn = static_cast<Natural>(whole);
    if (frac < 1e-9L || frac > 1 - 1e-9L) {
        // Too close to an integer for 64-bit mantissa rounding to settle the floor.
        using boost::multiprecision::cpp_bin_float_50;
        cpp_bin_float_50 precise = cpp_bin_float_50(n) * log(cpp_bin_float_50(n));
        floor_nlogn = static_cast<Natural>(floor(precise));
    }
    return 2 * (floor_nlogn + 1);
}

NthQuery make_nth_query(Natural n, GateVariant variant) {
    if (n == 0) throw std::invalid_argument("nth_prime: n must be >= 1");
    return {n, nth_bound(n), variant};
}

namespace {

constexpr Natural small_primes[] = {2, 3, 5};

Natural pi_at(std::span<const Natural> pi_from_7, Natural x) {
    return pi_from_7[x - 7];
}

void check_cover(std::span<const Natural> pi_from_7, Natural bound) {
    if (pi_from_7.size() < bound - 6)
        throw std::invalid_argument("nth_prime: pi prefix does not reach the summation bound " +
                                    std::to_string(bound));
}

}  // namespace

Natural nth_prime(Natural n, GateVariant variant, std::span<const Natural> pi_from_7) {
    NthQuery q = make_nth_query(n, variant);
    if (n <= 3) return small_primes[n - 1];
    check_cover(pi_from_7, q.bound_B);
    Natural result = 7;
    for (Natural x = 7; x <= q.bound_B; ++x) result += gate(n, pi_at(pi_from_7, x), variant);
    if (result > q.bound_B)
        throw std::logic_error("nth_prime: result " + std::to_string(result) + " exceeds bound " +
                               std::to_string(q.bound_B));
    return result;
}

Natural nth_prime(Natural n, GateVariant variant) {
    if (n == 0) throw std::invalid_argument("nth_prime: n must be >= 1");
    if (n <= 3) return small_primes[n - 1];
    std::vector<Natural> pis = pi_incremental(nth_bound(n));
    return nth_prime(n, variant, pis);
}

Natural nth_prime_complement(Natural n) {
    if (n == 0) throw std::invalid_argument("nth_prime: n must be >= 1");
    if (n <= 3) return small_primes[n - 1];
    Natural bound = nth_bound(n);
    Natural floor_nlogn = bound / 2 - 1;
    std::vector<Natural> pis = pi_incremental(bound);
    Natural subtracted = 0;
    for (Natural x = 7; x <= bound; ++x) subtracted += pi_at(pis, x) / n;
    return 3 + 2 * floor_nlogn - subtracted;
}

namespace {

template <typename Indicator>
Natural gap_product_sum(Natural n, Indicator indicator, std::vector<Natural>* terms) {
    Natural sum = 0;
    Natural product = 1;
    for (Natural i = 1; i <= n; ++i) {
        product *= 1 - indicator(n + i);
        if (terms) terms->push_back(product);
        // Once a factor is zero every later product is zero too.
        if (product == 0) break;
        sum += product;
    }
    return sum;
}

}  // namespace

Natural next_prime_formula(Natural n) {
    if (n == 0) throw std::invalid_argument("next_prime_formula: n must be >= 1");
    auto ind = [](Natural x) { return static_cast<Natural>(prime_indicator(x)); };
    // The product already vanishes at i = nextp(n) - n, so the sum counts the
    // composites strictly between n and nextp(n).
    return n + 1 + gap_product_sum(n, ind, nullptr);
}

std::vector<Natural> next_prime_formula_terms(Natural n) {
    if (n == 0) throw std::invalid_argument("next_prime_formula: n must be >= 1");
    std::vector<Natural> terms;
    gap_product_sum(n, [](Natural x) { return static_cast<Natural>(prime_indicator(x)); }, &terms);
    return terms;
}

Natural next_prime_formula_literal(Natural n) {
    if (n == 0) throw std::invalid_argument("next_prime_formula: n must be >= 1");
    return n + gap_product_sum(n, s_indicator, nullptr);
}

ScanState scan_start(Natural n, ScanMode mode) {
    if (mode == ScanMode::paper_faithful) {
        Natural k = n == 0 ? 0 : (n - 1 + 5) / 6;  // ceil((n - 1) / 6)
        return {k, ScanPhase::plus, mode};
    }
    return {std::max<Natural>(1, n / 6), ScanPhase::minus, mode};
}

Natural next_prime_scan(Natural n) {
    if (n < 2) return 2;
    if (n == 2) return 3;
    if (n < 5) return 5;
    for (ScanState st = scan_start(n, ScanMode::corrected);; st.advance()) {
        Natural m = st.candidate();
        if (m > n && prime_indicator(m)) return m;
    }
}

Natural next_prime_paper_scan(Natural n) {
    if (n < 5) throw std::domain_error("next_prime_paper_scan: defined for n >= 5");
    // 6k+1 then 6k+5 = 6(k+1)-1, then k+1: the same walk as the corrected
    // scan, but entered at 6k+1 and without the m > n filter.
    for (ScanState st = scan_start(n, ScanMode::paper_faithful);; st.advance()) {
        Natural m = st.candidate();
        if (s_indicator(m) == 1) return m;
    }
}

}  // namespace floorprime
