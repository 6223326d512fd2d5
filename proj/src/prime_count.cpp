#include "floorprime/prime_count.hpp"

#include <stdexcept>
#include <string>

#include "floorprime/s_test.hpp"

namespace floorprime {

namespace {

void require_domain(Natural x, const char* who) {
    if (x < 7) throw std::domain_error(std::string(who) + ": defined for x >= 7");
}

}  // namespace

std::string_view to_string(PiMethod m) {
    switch (m) {
        case PiMethod::full: return "full";
        case PiMethod::reduced: return "reduced";
        case PiMethod::incremental: return "incremental";
        case PiMethod::oracle: return "oracle";
    }
    return "?";
}

PiResult pi_full(Natural n) {
    require_domain(n, "pi_full");
    Natural count = 4;
    for (Natural i = 7 + 1; i <= n; ++i) count += static_cast<Natural>(prime_indicator(i));
    // i = 7 itself is covered by the constant 4 together with 2, 3, 5.
    return {n, count, PiMethod::full};
}

PiResult pi_reduced(Natural x) {
    require_domain(x, "pi_reduced");
    Natural count = 4;
    for (Natural j = 1; j <= (x - 1) / 6; ++j) count += s_indicator(6 * j + 1);
    for (Natural j = 1; j <= (x + 1) / 6; ++j) count += s_indicator(6 * j - 1);
    return {x, count, PiMethod::reduced};
}

std::vector<Natural> pi_incremental(Natural range_end) {
    require_domain(range_end, "pi_incremental");
    std::vector<Natural> out;
    out.reserve(range_end - 6);
    Natural count = 4;
    out.push_back(count);
    for (Natural x = 8; x <= range_end; ++x) {
        count += static_cast<Natural>(prime_indicator(x));
        out.push_back(count);
    }
    return out;
}

std::vector<Natural> pi_full_series(Natural range_end) {
    return pi_incremental(range_end);
}

std::vector<Natural> pi_reduced_series(Natural range_end) {
    require_domain(range_end, "pi_reduced_series");
    std::vector<Natural> out;
    out.reserve(range_end - 6);
    Natural count = 4;
    Natural plus_limit = 0;   // terms 6j+1 summed so far
    Natural minus_limit = 0;  // terms 6j-1 summed so far
    for (Natural x = 7; x <= range_end; ++x) {
        for (; plus_limit < (x - 1) / 6; ++plus_limit) count += s_indicator(6 * (plus_limit + 1) + 1);
        for (; minus_limit < (x + 1) / 6; ++minus_limit) count += s_indicator(6 * (minus_limit + 1) - 1);
        out.push_back(count);
    }
    return out;
}

}  // namespace floorprime
