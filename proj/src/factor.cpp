#include "fibalg/factor.hpp"

#include <string>
#include <vector>

#include "fibalg/error.hpp"

namespace fibalg {

namespace {

const std::vector<std::uint32_t>& small_primes(std::uint64_t bound) {
    static std::uint64_t sieved_to = 0;
    static std::vector<std::uint32_t> primes;
    // Bound changes are rare (tests may pass a smaller one); resieve on growth.
    if (bound > sieved_to) {
        std::vector<bool> composite(bound + 1, false);
        primes.clear();
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (composite[i])
                continue;
            primes.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= bound; j += i)
                composite[j] = true;
        }
        sieved_to = bound;
    }
    return primes;
}

// Splits off an exact power n = r^k with k >= 2, if any.
std::optional<std::pair<Integer, unsigned>> perfect_power(const Integer& n) {
    if (mpz_perfect_power_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
        Integer r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0)
            return std::make_pair(r, static_cast<unsigned>(k));
    }
    return std::nullopt;
}

std::uint64_t take(std::uint64_t& pool, std::uint64_t amount) {
    const std::uint64_t granted = amount < pool ? amount : pool;
    pool -= granted;
    return granted;
}

} // namespace

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::optional<Integer> pollard_rho(const Integer& n, std::uint64_t max_iterations, std::uint64_t* used) {
    std::uint64_t iterations = 0;
    auto finish = [&](std::optional<Integer> r) {
        if (used != nullptr)
            *used = iterations;
        return r;
    };
    if (mpz_even_p(n.get_mpz_t()) != 0)
        return finish(Integer(2));

    Integer y, x, ys, q, g, diff;
    // Deterministic sequence of increments keeps results reproducible.
    for (unsigned long c = 1; iterations < max_iterations; ++c) {
        y = 2;
        q = 1;
        g = 1;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto step = [&](Integer& v) {
            v = v * v + c;
            v %= n;
        };
        while (g == 1 && iterations < max_iterations) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1 && iterations < max_iterations) {
                ys = y;
                const std::uint64_t batch = (m < r - k) ? m : r - k;
                for (std::uint64_t i = 0; i < batch; ++i) {
                    step(y);
                    diff = x - y;
                    q *= abs(diff);
                    q %= n;
                }
                iterations += batch;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // The batch overshot; replay one step at a time from ys.
            do {
                step(ys);
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1)
            return finish(g);
    }
    return finish(std::nullopt);
}

Factorization factorize(const Integer& n, FactorBudget& budget) {
    if (n == 0)
        throw InvalidInput("cannot factor zero");
    Factorization out;
    Integer rest = abs(n);

    for (std::uint32_t p : small_primes(budget.trial_bound)) {
        if (rest == 1)
            break;
        if (Integer(p) * p > rest)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++out[Integer(p)];
        }
    }
    if (rest == 1)
        return out;

    // Each pending entry is a cofactor together with its multiplicity.
    std::vector<std::pair<Integer, unsigned>> pending{{rest, 1}};
    while (!pending.empty()) {
        auto [c, mult] = pending.back();
        pending.pop_back();
        if (c == 1)
            continue;
        if (c <= Integer(budget.trial_bound) * budget.trial_bound || is_probable_prime(c)) {
            // Below bound^2 a cofactor free of small primes is prime.
            out[c] += mult;
            continue;
        }
        if (auto pw = perfect_power(c)) {
            pending.emplace_back(pw->first, mult * pw->second);
            continue;
        }

        std::uint64_t used = 0;
        const std::uint64_t granted = take(budget.work, budget.rho_iterations);
        std::optional<Integer> d = pollard_rho(c, granted, &used);
        budget.work += granted - (used < granted ? used : granted);
        // Elliptic curves pull out 12-20 digit factors that would leave the
        // sieve with a much larger composite.
        if (!d && mpz_sizeinbase(c.get_mpz_t(), 10) > 55) {
            for (auto [b1, curves] : {std::pair<std::uint64_t, unsigned>{2'000, 25}, {11'000, 90}}) {
                std::uint64_t ecm_used = 0;
                d = ecm(c, b1, curves, budget.work, &ecm_used);
                take(budget.work, ecm_used);
                if (d)
                    break;
            }
        }
        if (!d) {
            std::uint64_t sieve_used = 0;
            d = siqs(c, budget.work, &sieve_used);
            take(budget.work, sieve_used);
        }
        if (!d)
            throw Undecided("factorization budget exhausted on a " +
                            std::to_string(mpz_sizeinbase(c.get_mpz_t(), 10)) + "-digit cofactor");
        Integer other = c / *d;
        pending.emplace_back(*d, mult);
        pending.emplace_back(std::move(other), mult);
    }
    return out;
}

Factorization factorize(const Integer& n) {
    FactorBudget budget;
    return factorize(n, budget);
}

} // namespace fibalg
