#include "floorprime/prime_locate.hpp"

#include <gtest/gtest.h>

#include "floorprime/oracle.hpp"
#include "floorprime/prime_count.hpp"
#include "floorprime/s_test.hpp"

namespace floorprime {
namespace {

TEST(Gate, Examples) {
    EXPECT_EQ(gate(5, 3, GateVariant::b), 1u);
    EXPECT_EQ(gate(5, 5, GateVariant::a), 0u);
    EXPECT_EQ(gate_a_unguarded(5, 12), -1);
    EXPECT_THROW(gate(5, 12, GateVariant::a), gate_domain_error);
    EXPECT_THROW(gate(0, 1, GateVariant::b), std::invalid_argument);
}

TEST(Gate, StepShape) {
    for (Natural n = 1; n <= 200; ++n) {
        for (Natural x = 0; x < 2 * n; ++x) {
            Natural want = x < n ? 1 : 0;
            ASSERT_EQ(gate(n, x, GateVariant::a), want);
            ASSERT_EQ(gate(n, x, GateVariant::b), want);
        }
        for (Natural x = 2 * n; x < 10 * n; ++x) ASSERT_EQ(gate(n, x, GateVariant::b), 0u);
    }
}

TEST(NthBound, Examples) {
    EXPECT_EQ(nth_bound(1), 2u);
    EXPECT_EQ(nth_bound(50), 392u);
    EXPECT_EQ(nth_bound(250), 2762u);
    EXPECT_EQ(nth_bound(10000), 2u * (92103u + 1u));
}

TEST(NthPrime, Examples) {
    EXPECT_EQ(nth_prime(50), 229u);
    EXPECT_EQ(nth_prime(250), 1583u);
    EXPECT_EQ(nth_prime(1), 2u);
    EXPECT_EQ(nth_prime(2), 3u);
    EXPECT_EQ(nth_prime(3), 5u);
    EXPECT_EQ(nth_prime(4), 7u);
    EXPECT_THROW(nth_prime(0), std::invalid_argument);
}

TEST(NthPrime, VariantsAgreeWithOracle) {
    Natural top = nth_bound(500);
    auto pis = pi_incremental(top);
    oracle::SieveTable sieve(top);
    for (Natural n = 1; n <= 500; ++n) {
        Natural truth = sieve.primes().at(n - 1);
        ASSERT_EQ(nth_prime(n, GateVariant::a, pis), truth) << n;
        ASSERT_EQ(nth_prime(n, GateVariant::b, pis), truth) << n;
        if (n <= 120) ASSERT_EQ(nth_prime_complement(n), truth) << n;
    }
}

TEST(NthPrime, ShortPrefixRejected) {
    auto pis = pi_incremental(100);
    EXPECT_THROW(nth_prime(50, GateVariant::b, pis), std::invalid_argument);
}

TEST(NextPrimeFormula, Examples) {
    EXPECT_EQ(next_prime_formula(7), 11u);
    EXPECT_EQ(next_prime_formula(1), 2u);
    EXPECT_EQ(next_prime_formula(100000000), 100000007u);
}

TEST(NextPrimeFormula, LiteralExpressionCharacterization) {
    // floor(S(8)) = 1 zeroes the first product, so the expression as written returns 7.
    EXPECT_EQ(next_prime_formula_literal(7), 7u);
}

TEST(NextPrimeFormula, TermsAreOnesThenZero) {
    for (Natural n = 5; n <= 200; ++n) {
        Natural gap = oracle::oracle_next(n) - n;
        auto terms = next_prime_formula_terms(n);
        ASSERT_EQ(terms.size(), gap) << n;
        for (Natural i = 1; i < gap; ++i) ASSERT_EQ(terms[i - 1], 1u);
        ASSERT_EQ(terms.back(), 0u);
    }
}

TEST(NextPrimeScan, Examples) {
    EXPECT_EQ(next_prime_scan(9), 11u);
    EXPECT_EQ(next_prime_scan(2), 3u);
    EXPECT_EQ(next_prime_scan(0), 2u);
    EXPECT_EQ(next_prime_scan(1), 2u);
    EXPECT_EQ(next_prime_scan(3), 5u);
    EXPECT_EQ(next_prime_scan(4), 5u);
    EXPECT_EQ(next_prime_scan(5), 7u);
    EXPECT_EQ(next_prime_scan(10000000000000ULL), 10000000000037ULL);
}

TEST(NextPrime, FormulaAndScanAgreeWithOracle) {
    for (Natural n = 1; n <= 10000; ++n) {
        Natural truth = oracle::oracle_next(n);
        ASSERT_EQ(next_prime_formula(n), truth) << n;
        ASSERT_EQ(next_prime_scan(n), truth) << n;
    }
}

TEST(ScanState, CorrectedWalkIsAscendingAndComplete) {
    for (Natural n = 0; n <= 600; ++n) {
        ScanState st = scan_start(n, ScanMode::corrected);
        Natural prev = 0;
        // Every 6j+-1 value in (n, n + 60] appears, in increasing order.
        std::vector<Natural> emitted;
        for (; st.candidate() <= n + 60; st.advance()) {
            Natural c = st.candidate();
            ASSERT_GT(c, prev);
            prev = c;
            if (c > n) emitted.push_back(c);
        }
        std::vector<Natural> expected;
        for (Natural v = n + 1; v <= n + 60; ++v)
            if (v % 6 == 1 || v % 6 == 5) expected.push_back(v);
        if (!expected.empty() && expected.front() == 1) expected.erase(expected.begin());
        ASSERT_EQ(emitted, expected) << n;
    }
}

TEST(NextPrimePaperScan, Examples) {
    EXPECT_EQ(next_prime_paper_scan(9), 13u);
    EXPECT_EQ(next_prime_paper_scan(11), 13u);
    EXPECT_EQ(next_prime_paper_scan(15), 19u);
    // Prime n = 6k+1 is its own first candidate.
    EXPECT_EQ(next_prime_paper_scan(13), 13u);
    EXPECT_THROW(next_prime_paper_scan(4), std::domain_error);
}

TEST(NextPrimePaperScan, PublishedInputsAreUnaffected) {
    EXPECT_EQ(next_prime_paper_scan(100000000), 100000007u);
    EXPECT_EQ(next_prime_paper_scan(1000000000), 1000000007u);
}

}  // namespace
}  // namespace floorprime
