#pragma once

// Prime counting function pi(x) through the S indicator.

#include <string_view>
#include <vector>

#include "floorprime/exact_arith.hpp"

namespace floorprime {

enum class PiMethod { full, reduced, incremental, oracle };

std::string_view to_string(PiMethod m);

struct PiResult {
    Natural x = 0;
    Natural count = 0;
    PiMethod method = PiMethod::reduced;
};

/// 4 + sum_{i=7..n} [i prime], with the corrected is_prime indicator. n >= 7.
PiResult pi_full(Natural n);

/// 4 + sum_{j=1..floor((x-1)/6)} floor(S(6j+1)) + sum_{j=1..floor((x+1)/6)} floor(S(6j-1)),
/// using the raw indicator exactly as written. x >= 7.
PiResult pi_reduced(Natural x);

/// pi(7), pi(8), ..., pi(range_end) in one left-to-right pass.
std::vector<Natural> pi_incremental(Natural range_end);

/// pi_full evaluated at every x in [7, range_end]; element i is pi_full(7 + i).
std::vector<Natural> pi_full_series(Natural range_end);

/// pi_reduced evaluated at every x in [7, range_end]; element i is pi_reduced(7 + i).
/// The two j-limits of the reduced form are advanced as x grows, so each
/// indicator term is evaluated once.
std::vector<Natural> pi_reduced_series(Natural range_end);

}  // namespace floorprime
