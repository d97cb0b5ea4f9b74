#include <random>

#include <gtest/gtest.h>

#include "fibalg/error.hpp"
#include "fibalg/identities.hpp"
#include "fibalg/seqcore.hpp"

using namespace fibalg;

TEST(Identities, AllHoldUpTo500) {
    for (IdentityId id : all_identities()) {
        if (id == IdentityId::P21_IX_AS_PRINTED)
            continue;
        const Report r = verify_range(id, identity_domain_min(id), 500);
        EXPECT_TRUE(r.passed()) << identity_name(id) << " first failure n=" << r.failures.front().n;
        EXPECT_EQ(r.checked, static_cast<std::uint64_t>(501 - identity_domain_min(id)));
    }
}

TEST(Identities, WorkedExamples) {
    auto r = check_identity(IdentityId::P21_II, 5);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, 55);
    EXPECT_EQ(r.rhs, 55);

    r = check_identity(IdentityId::P21_VII, 0);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, 4);

    r = check_identity(IdentityId::P21_IX, 1);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, 21);

    r = check_identity(IdentityId::P35_2, 0);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, 30);
    EXPECT_EQ(r.rhs, 30);
}

TEST(Identities, PrintedClauseIxFails) {
    const auto r = check_identity(IdentityId::P21_IX_AS_PRINTED, 1);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.lhs, 21);
    EXPECT_EQ(r.rhs, 6);
    const Report report = verify_range(IdentityId::P21_IX_AS_PRINTED, 1, 5);
    EXPECT_EQ(report.checked, 5u);
    EXPECT_EQ(report.failures.size(), 5u);
}

TEST(Identities, Clause1IsBiconditional) {
    for (int n = 0; n <= 300; ++n) {
        const bool f_div = fib(n) % 5 == 0;
        EXPECT_EQ(f_div, n % 5 == 0) << n;
        EXPECT_TRUE(check_identity(IdentityId::P21_I, n).holds);
    }
}

TEST(Identities, RangeReport) {
    EXPECT_EQ(verify_range(IdentityId::P21_III, 0, 100).checked, 101u);
    const Report r = verify_range(IdentityId::P21_XIII, 1, 1);
    EXPECT_EQ(r.checked, 1u);
    EXPECT_TRUE(r.passed());
    const auto j = to_json(r, false);
    EXPECT_FALSE(j.contains("millis"));
    EXPECT_EQ(j["identity"], "P21_XIII");
}

TEST(Identities, DomainErrors) {
    EXPECT_THROW(check_identity(IdentityId::P21_IV, 0), InvalidInput);
    EXPECT_THROW(verify_range(IdentityId::P21_III, 5, 4), InvalidInput);
    EXPECT_THROW(verify_range(IdentityId::P21_XI, 0, 4), InvalidInput);
}

TEST(Identities, NamesRoundTrip) {
    for (IdentityId id : all_identities())
        EXPECT_EQ(parse_identity(identity_name(id)), id);
    EXPECT_FALSE(parse_identity("P21_XV").has_value());
}

TEST(Ring, F5Factor) {
    EXPECT_EQ(f5_factor(0), 0);
    EXPECT_EQ(f5_factor(2), 11);
    EXPECT_EQ(f5_factor(3), 122);
    EXPECT_EQ(f5_factor(4), 1353);
    for (int n = 0; n <= 100; ++n)
        ASSERT_EQ(5 * f5_factor(n), fib(5 * n));
}

TEST(Ring, Decomposition) {
    EXPECT_EQ(fib(65), 1860497 * fib(35) + 1845492 * fib(5));
}

TEST(Ring, Membership) {
    EXPECT_TRUE(in_ring_A(55));
    EXPECT_TRUE(in_ring_A(0));
    EXPECT_FALSE(in_ring_A(58));
    EXPECT_TRUE(in_ideal_M(40));
    EXPECT_TRUE(in_ideal_M(0));
    EXPECT_FALSE(in_ideal_M(7));
}

TEST(Ring, ClosureOfA) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-10'000, 10'000);
    std::uniform_int_distribution<int> idx(0, 40);
    for (int t = 0; t < 200; ++t) {
        const Integer a = coeff(rng);
        const Integer b = coeff(rng);
        const Integer x = a * fib(5 * idx(rng));
        const Integer y = b * fib(5 * idx(rng));
        ASSERT_TRUE(in_ring_A(x + y));
        ASSERT_TRUE(in_ring_A(x * y));
    }
}

TEST(Ideal, Examples) {
    EXPECT_EQ(m_element({{1, 0, 1}}), 5);
    EXPECT_EQ(m_element({{0, 1, 0}}), 5);
    EXPECT_EQ(m_element({{1, 1, 1}, {-1, 0, 2}}), 40);
    EXPECT_THROW(m_element({}), InvalidInput);
}

TEST(Ideal, PrintedConventionCounterexample) {
    const Integer v = m_term_as_printed({1, 1, 1});
    EXPECT_EQ(v, 58);
    EXPECT_FALSE(in_ideal_M(v));
}

TEST(Ideal, AbsorbsProducts) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-500, 500);
    std::uniform_int_distribution<int> idx(0, 30);
    std::uniform_int_distribution<int> len(1, 4);
    auto random_element = [&] {
        std::vector<MTerm> terms(len(rng));
        for (auto& t : terms)
            t = {coeff(rng), coeff(rng), idx(rng)};
        // Direct evaluation of the term formula.
        Integer expect = 0;
        for (const auto& t : terms)
            expect += t.p * fib(5 * t.n) + 5 * t.q * lucas(5 * t.n + 1);
        const Integer v = m_element(terms);
        EXPECT_EQ(v, expect);
        return v;
    };
    for (int t = 0; t < 200; ++t) {
        const Integer v = random_element();
        const Integer w = random_element();
        const Integer z = coeff(rng);
        ASSERT_TRUE(in_ideal_M(v));
        ASSERT_TRUE(in_ideal_M(v + w));
        ASSERT_TRUE(in_ideal_M(z * v));
    }
}
