#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth for cross-checks: a sieve of Eratosthenes and 6k+-1
 * wheel trial division.
 *
 * Nothing here touches the S indicator, so agreement between this module
 * and the floor-sum formulas is evidence rather than tautology.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "floorprime/exact_arith.hpp"

namespace floorprime::oracle {

/// Sieve allocations above this many bytes are refused unless a larger
/// budget is passed explicitly.
inline constexpr std::size_t default_memory_budget = std::size_t{1} << 30;

class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SieveTable {
public:
    /// Sieve of all i <= limit. Throws std::domain_error for limit < 2 and
    /// budget_exceeded when the tables would exceed memory_budget bytes.
    explicit SieveTable(Natural limit, std::size_t memory_budget = default_memory_budget);

    Natural limit() const { return limit_; }
    bool is_prime(Natural i) const { return flags_.at(i); }
    /// Number of primes <= i.
    Natural count(Natural i) const { return prefix_counts_.at(i); }

    const std::vector<bool>& flags() const { return flags_; }
    const std::vector<Natural>& primes() const { return prime_list_; }
    const std::vector<Natural>& prefix_counts() const { return prefix_counts_; }

private:
    Natural limit_;
    std::vector<bool> flags_;
    std::vector<Natural> prime_list_;
    std::vector<Natural> prefix_counts_;
};

/// Bytes a SieveTable of the given limit would occupy (approximate upper bound).
std::size_t sieve_bytes(Natural limit);

/// Deterministic primality by division by 2, 3 and 6k+-1 up to isqrt(x).
bool trial_is_prime(Natural x);

/// n-th prime, 1-based (oracle_nth(1) == 2).
Natural oracle_nth(Natural n, std::size_t memory_budget = default_memory_budget);

/// Smallest prime strictly greater than n.
Natural oracle_next(Natural n);

/// Number of primes <= x.
Natural oracle_pi(Natural x, std::size_t memory_budget = default_memory_budget);

}  // namespace floorprime::oracle
