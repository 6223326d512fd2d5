#pragma once

// Reproduction of the published n-th prime / next prime tables and the
// cross-method verification sweeps behind the `bench` and `verify` commands.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "floorprime/exact_arith.hpp"

namespace floorprime::bench {

enum class TableId { table1, table2, custom };

std::string_view to_string(TableId t);

struct BenchRow {
    Natural input = 0;
    std::optional<Natural> expected;
    Natural got = 0;
    std::string method;
    double elapsed_seconds = 0.0;
    /// Informational comparison value that does not count toward all_match.
    std::optional<Natural> reference;
};

struct BenchReport {
    TableId table_id = TableId::custom;
    std::string title;
    std::vector<BenchRow> rows;
    bool all_match = true;
    Natural checked = 0;
    Natural failed = 0;
};

/// Recomputes all_match and failed from rows (rows without an expected value are skipped).
void finalize(BenchReport& report);

/// Build a report from rows and finalize it.
BenchReport make_report(TableId id, std::string title, std::vector<BenchRow> rows);

/// n in {50, 100, 200, 250} through nth_prime with both gate variants.
BenchReport bench_table1();

/// next_prime_scan at 10^8 .. 10^13.
BenchReport bench_table2();

enum class Suite { s_test, pi, nth, next, paper_scan };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

/// Run one equivalence sweep up to max_bound. Only failing points appear as
/// rows, except for paper_scan, which lists every divergence from the oracle
/// as an informational row.
BenchReport verify(Suite suite, Natural max_bound);

enum class Format { human, records };

/// Aligned text table followed by a summary line.
void write_human(std::ostream& os, const BenchReport& report);

/// One JSON object per row, then one summary object. Timings only appear in
/// the elapsed_seconds field.
void write_records(std::ostream& os, const BenchReport& report);

inline void write(std::ostream& os, const BenchReport& report, Format format) {
    format == Format::human ? write_human(os, report) : write_records(os, report);
}

}  // namespace floorprime::bench
