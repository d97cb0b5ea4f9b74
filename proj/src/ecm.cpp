#include <algorithm>
#include <random>
#include <vector>

#include "fibalg/factor.hpp"

namespace fibalg {

namespace {

// Montgomery curve point in projective (X : Z) form.
struct Point {
    Integer x;
    Integer z;
};

class Curve {
public:
    Curve(const Integer& n, Integer a24) : n_(n), a24_(std::move(a24)) {}

    std::uint64_t ops() const { return ops_; }

    Point dbl(const Point& p) {
        ++ops_;
        Integer s = p.x + p.z;
        Integer d = p.x - p.z;
        s = s * s % n_;
        d = d * d % n_;
        Integer t = s - d;
        Point r;
        r.x = s * d % n_;
        r.z = t * ((d + a24_ * t) % n_) % n_;
        return r;
    }

    // p + q given diff = p - q.
    Point add(const Point& p, const Point& q, const Point& diff) {
        ++ops_;
        Integer u = (p.x - p.z) * (q.x + q.z) % n_;
        Integer v = (p.x + p.z) * (q.x - q.z) % n_;
        Integer s = u + v;
        Integer d = u - v;
        Point r;
        r.x = diff.z * (s * s % n_) % n_;
        r.z = diff.x * (d * d % n_) % n_;
        return r;
    }

    Point mul(const Point& p, const Integer& k) {
        if (k == 1)
            return p;
        Point lo = p;
        Point hi = dbl(p);
        const auto bits = mpz_sizeinbase(k.get_mpz_t(), 2);
        for (auto i = bits - 1; i-- > 0;) {
            if (mpz_tstbit(k.get_mpz_t(), i) != 0) {
                lo = add(hi, lo, p);
                hi = dbl(hi);
            } else {
                hi = add(hi, lo, p);
                lo = dbl(lo);
            }
        }
        return lo;
    }

private:
    const Integer& n_;
    Integer a24_;
    std::uint64_t ops_ = 0;
};

std::vector<std::uint32_t> primes_up_to(std::uint64_t bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::optional<Integer> nontrivial(const Integer& g, const Integer& n) {
    if (g != 1 && g != n)
        return g;
    return std::nullopt;
}

// One curve with Suyama's parametrization. Returns a factor, or nothing.
std::optional<Integer> run_curve(const Integer& n, const Integer& sigma, std::uint64_t b1, std::uint64_t b2,
                                 const std::vector<std::uint32_t>& primes, std::uint64_t& ops) {
    const Integer u = (sigma * sigma - 5) % n;
    const Integer v = 4 * sigma % n;
    const Integer u3 = u * u * u % n;
    const Integer v3 = v * v * v % n;
    Integer vmu = v - u;
    Integer num = vmu * vmu % n * vmu % n * ((3 * u + v) % n) % n;
    Integer den = 16 * u3 % n * v % n;
    Integer g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    if (g != 1)
        return nontrivial(g, n);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    Curve curve(n, num * inv % n);

    Point q{u3, v3};
    for (std::uint32_t p : primes) {
        if (p > b1)
            break;
        std::uint64_t pe = p;
        while (pe * p <= b1)
            pe *= p;
        q = curve.mul(q, Integer(static_cast<unsigned long>(pe)));
    }
    mpz_gcd(g.get_mpz_t(), q.z.get_mpz_t(), n.get_mpz_t());
    if (g != 1) {
        ops += curve.ops();
        return nontrivial(g, n);
    }

    // Stage 2, standard continuation: for each prime p = r + 2d accumulate
    // X_R Z_S - X_S Z_R with R = rQ, S = 2dQ.
    constexpr std::uint64_t kD = 105;
    std::vector<Point> s(kD + 1);
    std::vector<Integer> beta(kD + 1);
    s[1] = curve.dbl(q);
    s[2] = curve.dbl(s[1]);
    for (std::uint64_t d = 3; d <= kD; ++d)
        s[d] = curve.add(s[d - 1], s[1], s[d - 2]);
    for (std::uint64_t d = 1; d <= kD; ++d)
        beta[d] = s[d].x * s[d].z % n;

    std::uint64_t r = (b1 % 2 == 1) ? b1 : b1 - 1;
    Point big_r = curve.mul(q, Integer(static_cast<unsigned long>(r)));
    Point big_t = curve.mul(q, Integer(static_cast<unsigned long>(r - 2 * kD)));
    Integer acc = 1;
    std::uint64_t stage2_primes = 0;
    auto it = std::upper_bound(primes.begin(), primes.end(), static_cast<std::uint32_t>(r));
    for (; r < b2; r += 2 * kD) {
        const Integer alpha = big_r.x * big_r.z % n;
        for (; it != primes.end() && *it <= r + 2 * kD; ++it) {
            const std::uint64_t d = (*it - r) / 2;
            ++stage2_primes;
            acc = acc * (((big_r.x - s[d].x) * (big_r.z + s[d].z) - alpha + beta[d]) % n) % n;
        }
        Point next = curve.add(big_r, s[kD], big_t);
        big_t = std::move(big_r);
        big_r = std::move(next);
    }
    ops += curve.ops() + stage2_primes / 4;
    mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
    return nontrivial(g, n);
}

} // namespace

std::optional<Integer> ecm(const Integer& n, std::uint64_t b1, unsigned curves, std::uint64_t max_work,
                           std::uint64_t* used) {
    std::uint64_t ops = 0;
    auto finish = [&](std::optional<Integer> r) {
        if (used != nullptr)
            *used = ops;
        return r;
    };
    const std::uint64_t b2 = 100 * b1;
    const std::vector<std::uint32_t> primes = primes_up_to(b2 + 2 * 105);
    std::mt19937_64 rng(0x5eed0000ULL + b1);
    for (unsigned c = 0; c < curves && ops < max_work; ++c) {
        const Integer sigma(static_cast<unsigned long>(6 + rng() % ((1ULL << 32) - 6)));
        if (auto f = run_curve(n, sigma, b1, b2, primes, ops))
            return finish(f);
    }
    return finish(std::nullopt);
}

} // namespace fibalg
