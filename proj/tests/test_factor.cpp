#include <random>

#include <gtest/gtest.h>

#include "fibalg/error.hpp"
#include "fibalg/factor.hpp"
#include "fibalg/seqcore.hpp"

using namespace fibalg;

namespace {

Factorization brute_force(std::uint64_t n) {
    Factorization out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[Integer(static_cast<unsigned long>(p))];
            n /= p;
        }
    if (n > 1)
        ++out[Integer(static_cast<unsigned long>(n))];
    return out;
}

Integer product(const Factorization& f) {
    Integer out = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i)
            out *= p;
    return out;
}

} // namespace

TEST(Factorize, AgreesWithBruteForce) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint64_t> dist(2, 5'000'000'000ULL);
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t n = dist(rng);
        ASSERT_EQ(factorize(Integer(static_cast<unsigned long>(n))), brute_force(n)) << n;
    }
}

TEST(Factorize, SignAndUnits) {
    EXPECT_TRUE(factorize(Integer(1)).empty());
    EXPECT_TRUE(factorize(Integer(-1)).empty());
    EXPECT_EQ(factorize(Integer(-12)), (Factorization{{2, 2}, {3, 1}}));
    EXPECT_THROW(factorize(Integer(0)), InvalidInput);
}

TEST(Factorize, PerfectPowers) {
    const Integer p("1000000000039");
    Integer n = p * p * p;
    EXPECT_EQ(factorize(n), (Factorization{{p, 3}}));
}

TEST(Factorize, FibonacciAndLucasNumbers) {
    for (int n : {100, 137, 200, 240}) {
        const Integer v = lucas(n);
        const Factorization f = factorize(v);
        EXPECT_EQ(product(f), v) << n;
        for (const auto& [p, e] : f)
            EXPECT_TRUE(is_probable_prime(p)) << p.get_str();
    }
}

TEST(PollardRho, FindsMediumFactor) {
    const Integer n = Integer("1000003") * Integer("998244353");
    std::uint64_t used = 0;
    const auto d = pollard_rho(n, 1 << 20, &used);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(n % *d, 0);
    EXPECT_GT(used, 0u);
}

TEST(Ecm, FindsFourteenDigitFactor) {
    const Integer p("23230657239121");
    const Integer q("3834936832404134644974961");
    const auto d = ecm(p * q, 2000, 60, 1'000'000'000);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(*d == p || *d == q);
}

TEST(Siqs, SplitsBalancedSemiprime) {
    const Integer p("62379555831803099867272961");
    const Integer q("5079180256659675431743744001");
    const auto d = siqs(p * q, 1'000'000'000);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(*d == p || *d == q);
}

TEST(Siqs, SmallerSemiprime) {
    const Integer p("17276792316211992881");
    const Integer q("3834936832404134644974961");
    const auto d = siqs(p * q, 1'000'000'000);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(*d == p || *d == q);
}

TEST(Factorize, BudgetExhaustionIsUndecided) {
    const Integer n = Integer("62379555831803099867272961") * Integer("5079180256659675431743744001");
    FactorBudget budget;
    budget.work = 1000;
    EXPECT_THROW(factorize(n, budget), Undecided);
}
