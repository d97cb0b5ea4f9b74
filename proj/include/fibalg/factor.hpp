#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "fibalg/numeric.hpp"

namespace fibalg {

/// Work limits for integer factorization.
///
/// Trial division up to trial_bound is always performed. Beyond that every
/// Pollard rho iteration, every elliptic curve point operation and every
/// 1024 cells of quadratic sieve cost one unit, all drawn from `work`.
struct FactorBudget {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 1U << 20; // per composite cofactor
    std::uint64_t work = 1'000'000'000;
};

/// Prime -> exponent.
using Factorization = std::map<Integer, unsigned>;

bool is_probable_prime(const Integer& n);

/// Factors |n| completely (n != 0). Throws Undecided when the budget runs
/// out before every cofactor is proved prime or split; the budget is
/// updated in place.
Factorization factorize(const Integer& n, FactorBudget& budget);

/// Convenience overload with a default budget.
Factorization factorize(const Integer& n);

/// Brent's variant of Pollard rho on composite n. Returns a nontrivial
/// factor or nothing once max_iterations is spent.
std::optional<Integer> pollard_rho(const Integer& n, std::uint64_t max_iterations,
                                   std::uint64_t* used = nullptr);

/// Lenstra's elliptic curve method with Montgomery curves: up to `curves`
/// curves with stage-1 bound b1 (>= 1000) and stage-2 bound 100*b1. One
/// unit per curve point operation.
std::optional<Integer> ecm(const Integer& n, std::uint64_t b1, unsigned curves, std::uint64_t max_work,
                           std::uint64_t* used = nullptr);

/// Self-initializing quadratic sieve for an odd composite n that is not a
/// perfect power and has no factors below ~10^6. Returns a nontrivial
/// factor, or nothing when max_work units are spent.
std::optional<Integer> siqs(const Integer& n, std::uint64_t max_work, std::uint64_t* used = nullptr);

} // namespace fibalg
