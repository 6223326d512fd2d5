#include "floorprime/cli.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "floorprime/bench.hpp"
#include "floorprime/oracle.hpp"
#include "floorprime/prime_count.hpp"
#include "floorprime/prime_locate.hpp"
#include "floorprime/s_test.hpp"

namespace floorprime::cli {

namespace {

struct Options {
    Natural value = 0;
    std::string method;
    std::string variant = "b";
    bool use_oracle = false;
    std::string table = "all";
    std::string format = "human";
    std::string suite;
    Natural max_bound = 0;
};

int cmd_is_prime(const Options& o, std::ostream& out) {
    Natural x = o.value;
    if (o.method == "trial") {
        out << x << ": " << (oracle::trial_is_prime(x) ? "prime" : "composite") << " (trial)\n";
    } else if (o.method == "s-test-raw") {
        if (x == 0) throw std::domain_error("s-test-raw: x must be >= 1");
        SBreakdown b = s(x);
        out << "x=" << x << " K=" << b.limit_K << " s1=" << b.s1 << " s2=" << b.s2 << " s=" << b.s
            << " indicator=" << s_indicator(x) << '\n';
        if (!in_s_domain(x))
            out << "warning: " << x
                << " is outside the domain where S decides primality (x >= 11 and gcd(x, 6) = 1); "
                   "the indicator is not a primality verdict\n";
    } else {
        Verdict v = is_prime(x);
        out << x << ": " << to_string(v.classification) << " (" << to_string(v.method) << ")\n";
    }
    return exit_ok;
}

int cmd_pi(const Options& o, std::ostream& out) {
    Natural count = 0;
    if (o.method == "sieve") {
        count = oracle::oracle_pi(o.value);
    } else if (o.method == "full") {
        count = pi_full(o.value).count;
    } else {
        count = pi_reduced(o.value).count;
    }
    out << count << '\n';
    return exit_ok;
}

int cmd_nth(const Options& o, std::ostream& out) {
    if (o.use_oracle) {
        out << oracle::oracle_nth(o.value) << '\n';
    } else {
        out << nth_prime(o.value, o.variant == "a" ? GateVariant::a : GateVariant::b) << '\n';
    }
    return exit_ok;
}

int cmd_next(const Options& o, std::ostream& out) {
    Natural r = 0;
    if (o.method == "formula") {
        r = next_prime_formula(o.value);
    } else if (o.method == "paper-scan") {
        r = next_prime_paper_scan(o.value);
    } else if (o.method == "oracle") {
        r = oracle::oracle_next(o.value);
    } else {
        r = next_prime_scan(o.value);
    }
    out << r << '\n';
    return exit_ok;
}

bench::Format parse_format(const std::string& f) {
    return f == "records" ? bench::Format::records : bench::Format::human;
}

int cmd_bench(const Options& o, std::ostream& out) {
    bool ok = true;
    if (o.table == "1" || o.table == "all") {
        auto report = bench::bench_table1();
        bench::write(out, report, parse_format(o.format));
        ok = ok && report.all_match;
    }
    if (o.table == "2" || o.table == "all") {
        auto report = bench::bench_table2();
        bench::write(out, report, parse_format(o.format));
        ok = ok && report.all_match;
    }
    return ok ? exit_ok : exit_mismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
    auto suite = bench::parse_suite(o.suite);
    auto report = bench::verify(*suite, o.max_bound);
    bench::write(out, report, parse_format(o.format));
    return report.all_match ? exit_ok : exit_mismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Floor-sum primality indicator, prime counting, n-th and next prime"};
    app.require_subcommand(1, 1);
    Options o;

    auto* is_prime_cmd = app.add_subcommand("is-prime", "Classify x");
    is_prime_cmd->add_option("x", o.value)->required();
    is_prime_cmd->add_option("--method", o.method)
        ->check(CLI::IsMember({"s-test", "trial", "s-test-raw"}))
        ->default_str("s-test");

    auto* pi_cmd = app.add_subcommand("pi", "Count primes <= x");
    pi_cmd->add_option("x", o.value)->required();
    pi_cmd->add_option("--method", o.method)->check(CLI::IsMember({"reduced", "full", "sieve"}));

    auto* nth_cmd = app.add_subcommand("nth", "n-th prime");
    nth_cmd->add_option("n", o.value)->required()->check(CLI::PositiveNumber);
    nth_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"a", "b"}));
    nth_cmd->add_flag("--oracle", o.use_oracle);

    auto* next_cmd = app.add_subcommand("next", "Smallest prime > n");
    next_cmd->add_option("n", o.value)->required();
    next_cmd->add_option("--method", o.method)->check(CLI::IsMember({"scan", "formula", "paper-scan", "oracle"}));

    auto* bench_cmd = app.add_subcommand("bench", "Reproduce the n-th prime and next prime tables");
    bench_cmd->add_option("--table", o.table)->check(CLI::IsMember({"1", "2", "all"}));
    bench_cmd->add_option("--format", o.format)->check(CLI::IsMember({"human", "records"}));

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check methods against the oracle");
    verify_cmd->add_option("--suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"s-test", "pi", "nth", "next", "paper-scan"}));
    verify_cmd->add_option("--max", o.max_bound)->required();
    verify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"human", "records"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (is_prime_cmd->parsed()) return cmd_is_prime(o, out);
        if (pi_cmd->parsed()) return cmd_pi(o, out);
        if (nth_cmd->parsed()) return cmd_nth(o, out);
        if (next_cmd->parsed()) return cmd_next(o, out);
        if (bench_cmd->parsed()) return cmd_bench(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
    } catch (const std::logic_error& e) {
        // domain_error / invalid_argument: the input is outside an operation's domain.
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const oracle::budget_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace floorprime::cli
