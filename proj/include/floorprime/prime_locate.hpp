#pragma once

/**
 * @file prime_locate.hpp
 * @brief The n-th prime as a gated sum over pi(x), and next-prime search.
 *
 * nth_prime evaluates P_n = 7 + sum_{x=7..B} f_n(pi(x)) with B = 2(floor(n ln n) + 1)
 * and f_n one of two arithmetic step gates (1 below n, 0 from n on).
 *
 * Three next-prime routes are provided: the gap-product sum, a 6k+-1 wheel
 * scan that tests every candidate in ascending order, and the published
 * block scan reproduced as-is (it can skip a 6k-1 candidate and can return
 * its own argument; see next_prime_paper_scan).
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "floorprime/exact_arith.hpp"

namespace floorprime {

enum class GateVariant {
    a,  ///< 1 - floor(x / n); valid only for x < 2n
    b,  ///< floor(2n / (x + n + 1))
};

std::string_view to_string(GateVariant v);

/// Raised when gate A is evaluated at x >= 2n, where it would emit a negative value.
class gate_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// f_n(x) for the given variant; 1 when x < n, 0 when x >= n.
Natural gate(Natural n, Natural x, GateVariant variant);

/// 1 - floor(x / n) with no domain check.
std::int64_t gate_a_unguarded(Natural n, Natural x);

/// 2 * (floor(n ln n) + 1).
Natural nth_bound(Natural n);

struct NthQuery {
    Natural n = 0;
    Natural bound_B = 0;
    GateVariant variant = GateVariant::b;
};

NthQuery make_nth_query(Natural n, GateVariant variant = GateVariant::b);

/// n-th prime (1-based). n in {1, 2, 3} come from a lookup; from n = 4 on the
/// gated sum is evaluated with pi supplied by pi_incremental.
Natural nth_prime(Natural n, GateVariant variant = GateVariant::b);

/// As nth_prime, reusing a precomputed pi prefix (element i is pi(7 + i))
/// that must cover at least nth_bound(n).
Natural nth_prime(Natural n, GateVariant variant, std::span<const Natural> pi_from_7);

/// The rearranged gate-A form 3 + 2 floor(n ln n) - sum_{x=7..B} floor(pi(x) / n).
Natural nth_prime_complement(Natural n);

/// Smallest prime > n via n + 1 + sum_{i=1..n} prod_{x=n+1..n+i} (1 - [x prime]),
/// with the running product extended one factor at a time. n >= 1.
Natural next_prime_formula(Natural n);

/// Summands of the gap-product sum for i = 1, 2, ... up to and including
/// the first zero (or i = n if none). All later summands are zero.
std::vector<Natural> next_prime_formula_terms(Natural n);

/// n + sum_{i=1..n} prod_{x=n+1..n+i} (1 - floor(S(x))) exactly as written,
/// with the raw indicator. Not the next prime in general (7 -> 7).
Natural next_prime_formula_literal(Natural n);

enum class ScanPhase { minus, plus };  ///< candidate 6k-1 or 6k+1
enum class ScanMode { corrected, paper_faithful };

/// Position of a 6k+-1 candidate walk.
struct ScanState {
    Natural k = 1;
    ScanPhase phase = ScanPhase::minus;
    ScanMode mode = ScanMode::corrected;

    Natural candidate() const { return phase == ScanPhase::minus ? 6 * k - 1 : 6 * k + 1; }

    void advance() {
        if (phase == ScanPhase::minus) {
            phase = ScanPhase::plus;
        } else {
            phase = ScanPhase::minus;
            ++k;
        }
    }
};

/// Starting state of each scan for argument n.
ScanState scan_start(Natural n, ScanMode mode);

/// Smallest prime > n, testing every 6k+-1 candidate above n in ascending order.
Natural next_prime_scan(Natural n);

/// The published block scan: k = ceil((n-1)/6), test 6k+1 then 6k+5, k += 1,
/// accepting the first m with S(m) = 1. Requires n >= 5. Returns m for
/// prime m = 6k+1 = n, and misses 6k-1 > n, so this is not the next prime
/// in general.
Natural next_prime_paper_scan(Natural n);

}  // namespace floorprime
