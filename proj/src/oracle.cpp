#include "floorprime/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace floorprime::oracle {

std::size_t sieve_bytes(Natural limit) {
    // One bit per flag plus one Natural per prefix count; the prime list is
    // bounded by roughly a fifth of the prefix table for any useful limit.
    long double n = static_cast<long double>(limit) + 1;
    long double bytes = n / 8 + n * sizeof(Natural) * 1.25L;
    if (bytes > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
        return std::numeric_limits<std::size_t>::max() / 2;
    return static_cast<std::size_t>(bytes);
}

SieveTable::SieveTable(Natural limit, std::size_t memory_budget) : limit_(limit) {
    if (limit < 2) throw std::domain_error("SieveTable: limit must be >= 2");
    if (sieve_bytes(limit) > memory_budget)
        throw budget_exceeded("SieveTable: limit " + std::to_string(limit) + " exceeds memory budget of " +
                              std::to_string(memory_budget) + " bytes");

    flags_.assign(limit + 1, true);
    flags_[0] = false;
    flags_[1] = false;
    for (Natural p = 2; p * p <= limit; ++p) {
        if (!flags_[p]) continue;
        for (Natural m = p * p; m <= limit; m += p) flags_[m] = false;
    }

    prefix_counts_.resize(limit + 1);
    Natural running = 0;
    for (Natural i = 0; i <= limit; ++i) {
        if (flags_[i]) {
            ++running;
            prime_list_.push_back(i);
        }
        prefix_counts_[i] = running;
    }
}

bool trial_is_prime(Natural x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0 || x % 3 == 0) return false;
    Natural root = isqrt(x);
    for (Natural d = 5; d <= root; d += 6) {
        if (x % d == 0 || x % (d + 2) == 0) return false;
    }
    return true;
}

Natural oracle_nth(Natural n, std::size_t memory_budget) {
    if (n == 0) throw std::domain_error("oracle_nth: index must be >= 1");
    // Rosser: p_n < n (ln n + ln ln n) for n >= 6.
    Natural limit = 13;
    if (n >= 6) {
        long double ln = std::log(static_cast<long double>(n));
        limit = static_cast<Natural>(static_cast<long double>(n) * (ln + std::log(ln))) + 1;
    }
    SieveTable table(limit, memory_budget);
    return table.primes().at(n - 1);
}

Natural oracle_next(Natural n) {
    Natural m = n + 1;
    while (!trial_is_prime(m)) ++m;
    return m;
}

Natural oracle_pi(Natural x, std::size_t memory_budget) {
    if (x < 2) return 0;
    return SieveTable(x, memory_budget).count(x);
}

}  // namespace floorprime::oracle
