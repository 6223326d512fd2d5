#include "floorprime/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "floorprime/oracle.hpp"
#include "floorprime/prime_count.hpp"
#include "floorprime/prime_locate.hpp"
#include "floorprime/s_test.hpp"

namespace floorprime::bench {

namespace {

template <typename F>
BenchRow timed_row(Natural input, std::optional<Natural> expected, std::string method, F&& compute) {
    auto start = std::chrono::steady_clock::now();
    Natural got = compute();
    auto stop = std::chrono::steady_clock::now();
    return {input, expected, got, std::move(method), std::chrono::duration<double>(stop - start).count(), {}};
}

void sort_rows(std::vector<BenchRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BenchRow& a, const BenchRow& b) { return a.input < b.input; });
}

BenchRow mismatch(Natural input, Natural expected, Natural got, std::string method) {
    return {input, expected, got, std::move(method), 0.0, {}};
}

}  // namespace

std::string_view to_string(TableId t) {
    switch (t) {
        case TableId::table1: return "table1";
        case TableId::table2: return "table2";
        case TableId::custom: return "custom";
    }
    return "?";
}

void finalize(BenchReport& report) {
    report.failed = 0;
    for (const auto& row : report.rows)
        if (row.expected && *row.expected != row.got) ++report.failed;
    report.all_match = report.failed == 0;
}

BenchReport make_report(TableId id, std::string title, std::vector<BenchRow> rows) {
    BenchReport report{id, std::move(title), std::move(rows), true, 0, 0};
    report.checked = static_cast<Natural>(std::count_if(report.rows.begin(), report.rows.end(),
                                                        [](const BenchRow& r) { return r.expected.has_value(); }));
    finalize(report);
    return report;
}

BenchReport bench_table1() {
    struct Entry {
        Natural n, value;
    };
    constexpr Entry entries[] = {{50, 229}, {100, 541}, {200, 1223}, {250, 1583}};
    std::vector<BenchRow> rows;
    for (auto [n, value] : entries) {
        rows.push_back(timed_row(n, value, "nth-gate-a", [n = n] { return nth_prime(n, GateVariant::a); }));
        rows.push_back(timed_row(n, value, "nth-gate-b", [n = n] { return nth_prime(n, GateVariant::b); }));
    }
    return make_report(TableId::table1, "nth prime", std::move(rows));
}

BenchReport bench_table2() {
    struct Entry {
        Natural n, value;
    };
    constexpr Entry entries[] = {
        {100000000ULL, 100000007ULL},
        {1000000000ULL, 1000000007ULL},
        {10000000000ULL, 10000000019ULL},
        {100000000000ULL, 100000000003ULL},
        {1000000000000ULL, 1000000000039ULL},
        {10000000000000ULL, 10000000000037ULL},
    };
    std::vector<BenchRow> rows;
    for (auto [n, value] : entries)
        rows.push_back(timed_row(n, value, "next-scan", [n = n] { return next_prime_scan(n); }));
    return make_report(TableId::table2, "next prime", std::move(rows));
}

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "s-test") return Suite::s_test;
    if (name == "pi") return Suite::pi;
    if (name == "nth") return Suite::nth;
    if (name == "next") return Suite::next;
    if (name == "paper-scan") return Suite::paper_scan;
    return std::nullopt;
}

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::s_test: return "s-test";
        case Suite::pi: return "pi";
        case Suite::nth: return "nth";
        case Suite::next: return "next";
        case Suite::paper_scan: return "paper-scan";
    }
    return "?";
}

namespace {

// For x coprime to 6 and >= 11: S(x) = 1 for primes and 0 <= S(x) < 1 for composites.
// Every x also goes through is_prime. Mismatch rows carry 1 for prime, 0 for composite.
BenchReport verify_s_test(Natural max_bound) {
    std::vector<BenchRow> rows;
    Natural checked = 0;
    oracle::SieveTable sieve(std::max<Natural>(max_bound, 2));
    for (Natural x = 1; x <= max_bound; ++x) {
        Natural truth = sieve.is_prime(x) ? 1 : 0;
        ++checked;
        Natural verdict = prime_indicator(x) ? 1 : 0;
        if (verdict != truth) rows.push_back(mismatch(x, truth, verdict, "is-prime"));
        if (!in_s_domain(x)) continue;
        ++checked;
        ExactRatio value = s(x).s;
        bool indicator_holds = truth ? value == ExactRatio(1) : (ExactRatio(0) <= value && value < ExactRatio(1));
        if (!indicator_holds) rows.push_back(mismatch(x, truth, value == ExactRatio(1) ? 1 : 0, "s-exact"));
    }
    BenchReport report = make_report(TableId::custom, "verify s-test", std::move(rows));
    report.checked = checked;
    return report;
}

BenchReport verify_pi(Natural max_bound) {
    std::vector<BenchRow> rows;
    if (max_bound < 7) return make_report(TableId::custom, "verify pi", {});
    oracle::SieveTable sieve(max_bound);
    auto full = pi_full_series(max_bound);
    auto reduced = pi_reduced_series(max_bound);
    for (Natural x = 7; x <= max_bound; ++x) {
        Natural truth = sieve.count(x);
        if (full[x - 7] != truth) rows.push_back(mismatch(x, truth, full[x - 7], "pi-full"));
        if (reduced[x - 7] != truth) rows.push_back(mismatch(x, truth, reduced[x - 7], "pi-reduced"));
    }
    // One direct evaluation of each scalar form at the top of the range.
    Natural truth = sieve.count(max_bound);
    Natural direct_full = pi_full(max_bound).count;
    Natural direct_reduced = pi_reduced(max_bound).count;
    if (direct_full != truth) rows.push_back(mismatch(max_bound, truth, direct_full, "pi-full-direct"));
    if (direct_reduced != truth) rows.push_back(mismatch(max_bound, truth, direct_reduced, "pi-reduced-direct"));
    sort_rows(rows);
    BenchReport report = make_report(TableId::custom, "verify pi", std::move(rows));
    report.checked = 2 * (max_bound - 6) + 2;
    return report;
}

BenchReport verify_nth(Natural max_bound) {
    std::vector<BenchRow> rows;
    if (max_bound == 0) return make_report(TableId::custom, "verify nth", {});
    Natural top_bound = 7;
    for (Natural n = 4; n <= max_bound; ++n) top_bound = std::max(top_bound, nth_bound(n));
    auto pis = pi_incremental(top_bound);
    oracle::SieveTable sieve(std::max<Natural>(top_bound, 16));
    const auto& primes = sieve.primes();
    for (Natural n = 1; n <= max_bound; ++n) {
        Natural truth = primes.at(n - 1);
        for (GateVariant v : {GateVariant::a, GateVariant::b}) {
            Natural got = 0;
            std::string method = "nth-gate-" + std::string(to_string(v));
            try {
                got = nth_prime(n, v, pis);
            } catch (const gate_domain_error&) {
                method += "-guard";
            }
            if (got != truth) rows.push_back(mismatch(n, truth, got, method));
        }
    }
    BenchReport report = make_report(TableId::custom, "verify nth", std::move(rows));
    report.checked = 2 * max_bound;
    return report;
}

BenchReport verify_next(Natural max_bound) {
    std::vector<BenchRow> rows;
    for (Natural n = 1; n <= max_bound; ++n) {
        Natural truth = oracle::oracle_next(n);
        Natural by_formula = next_prime_formula(n);
        Natural by_scan = next_prime_scan(n);
        if (by_formula != truth) rows.push_back(mismatch(n, truth, by_formula, "next-formula"));
        if (by_scan != truth) rows.push_back(mismatch(n, truth, by_scan, "next-scan"));
    }
    BenchReport report = make_report(TableId::custom, "verify next", std::move(rows));
    report.checked = 2 * max_bound;
    return report;
}

BenchReport verify_paper_scan(Natural max_bound) {
    std::vector<BenchRow> rows;
    Natural checked = 0;
    for (Natural n = 5; n <= max_bound; ++n) {
        ++checked;
        Natural truth = oracle::oracle_next(n);
        Natural got = next_prime_paper_scan(n);
        if (got != truth) rows.push_back({n, std::nullopt, got, "paper-scan-divergence", 0.0, truth});
    }
    BenchReport report = make_report(TableId::custom, "verify paper-scan", std::move(rows));
    report.checked = checked;
    return report;
}

}  // namespace

BenchReport verify(Suite suite, Natural max_bound) {
    switch (suite) {
        case Suite::s_test: return verify_s_test(max_bound);
        case Suite::pi: return verify_pi(max_bound);
        case Suite::nth: return verify_nth(max_bound);
        case Suite::next: return verify_next(max_bound);
        case Suite::paper_scan: return verify_paper_scan(max_bound);
    }
    throw std::invalid_argument("verify: unknown suite");
}

void write_human(std::ostream& os, const BenchReport& report) {
    os << "# " << report.title << " (" << to_string(report.table_id) << ")\n";
    if (!report.rows.empty()) {
        os << std::left << std::setw(16) << "input" << std::setw(16) << "expected" << std::setw(16) << "got"
           << std::setw(24) << "method" << "elapsed_s\n";
        for (const auto& row : report.rows) {
            std::string expected = row.expected ? std::to_string(*row.expected)
                                   : row.reference ? "(" + std::to_string(*row.reference) + ")"
                                                   : "-";
            std::ostringstream elapsed;
            elapsed << std::fixed << std::setprecision(6) << row.elapsed_seconds;
            os << std::left << std::setw(16) << row.input << std::setw(16) << expected << std::setw(16) << row.got
               << std::setw(24) << row.method << elapsed.str() << '\n';
        }
    }
    os << "checked=" << report.checked << " failed=" << report.failed
       << " all_match=" << (report.all_match ? "true" : "false") << '\n';
}

void write_records(std::ostream& os, const BenchReport& report) {
    for (const auto& row : report.rows) {
        nlohmann::ordered_json j;
        j["table"] = to_string(report.table_id);
        j["input"] = row.input;
        j["expected"] = row.expected ? nlohmann::ordered_json(*row.expected) : nlohmann::ordered_json(nullptr);
        j["got"] = row.got;
        j["method"] = row.method;
        if (row.reference) j["reference"] = *row.reference;
        j["elapsed_seconds"] = row.elapsed_seconds;
        os << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["table"] = to_string(report.table_id);
    summary["summary"] = report.title;
    summary["checked"] = report.checked;
    summary["failed"] = report.failed;
    summary["all_match"] = report.all_match;
    os << summary.dump() << '\n';
}

}  // namespace floorprime::bench
