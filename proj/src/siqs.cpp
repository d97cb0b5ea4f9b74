// Self-initializing quadratic sieve.
//
// Polynomials are g(x) = A x^2 + 2 B x + C with A = q_1 ... q_s a product of
// factor-base primes, B^2 = kN (mod A) and C = (B^2 - kN) / A, so that
// (A x + B)^2 - kN = A g(x). Each A yields 2^{s-1} values of B, walked in
// Gray-code order. Relations with one large prime are kept and paired up.

#include "fibalg/factor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fibalg {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    for (; e != 0; e >>= 1) {
        if (e & 1U)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += static_cast<std::int64_t>(m);
    return static_cast<u64>(t);
}

// Square root of a quadratic residue n modulo an odd prime p.
u64 sqrt_mod(u64 n, u64 p) {
    n %= p;
    if (n == 0)
        return 0;
    if (p % 4 == 3)
        return powmod(n, (p + 1) / 4, p);
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(n, q, p);
    u64 r = powmod(n, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j)
            b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

struct Params {
    std::size_t fb_size;
    u32 half_width; // sieve over [-M, M)
};

Params params_for(std::size_t digits) {
    struct Row {
        std::size_t digits;
        Params p;
    };
    static const Row table[] = {
        {20, {120, 16384}},   {25, {150, 16384}},   {30, {200, 32768}},    {35, {300, 32768}},
        {40, {450, 32768}},   {45, {700, 32768}},   {50, {1100, 65536}},   {55, {1600, 65536}},
        {60, {2300, 65536}},  {65, {3200, 65536}},  {70, {4500, 98304}},   {75, {6000, 98304}},
        {80, {8000, 131072}}, {90, {13000, 196608}}, {100, {22000, 262144}},
    };
    for (const auto& row : table)
        if (digits <= row.digits)
            return row.p;
    return table[std::size(table) - 1].p;
}

// Knuth-Schroeppel: choose a small square-free k making kN rich in small
// quadratic residues.
unsigned choose_multiplier(const Integer& n) {
    static const unsigned candidates[] = {1,  2,  3,  5,  6,  7,  10, 11, 13, 14, 15, 17, 19, 21,
                                          22, 23, 26, 29, 30, 31, 33, 34, 35, 37, 38, 39, 41, 42,
                                          43, 46, 47, 51, 53, 55, 57, 58, 59, 61, 62, 65, 66, 67,
                                          69, 70, 71, 73};
    std::vector<u32> primes;
    for (u32 p = 3; primes.size() < 300; p += 2) {
        bool prime = true;
        for (u32 d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            primes.push_back(p);
    }
    double best_score = -1e300;
    unsigned best = 1;
    for (unsigned k : candidates) {
        const Integer kn = n * k;
        const u64 m8 = mpz_fdiv_ui(kn.get_mpz_t(), 8);
        double score = -0.5 * std::log(static_cast<double>(k));
        if (m8 == 1)
            score += 2.0 * std::log(2.0);
        else if (m8 == 5)
            score += std::log(2.0);
        else if (m8 == 3 || m8 == 7)
            score += 0.5 * std::log(2.0);
        for (u32 p : primes) {
            const double lp = std::log(static_cast<double>(p));
            if (k % p == 0) {
                score += lp / p;
            } else {
                const u64 r = mpz_fdiv_ui(kn.get_mpz_t(), p);
                if (powmod(r, (p - 1) / 2, p) == 1)
                    score += 2.0 * lp / (p - 1);
            }
        }
        if (score > best_score) {
            best_score = score;
            best = k;
        }
    }
    return best;
}

struct Relation {
    Integer x;                                 // (A x + B) mod N, squared on the left side
    std::vector<std::pair<u32, u32>> exponents; // column -> exponent of the right side
    Integer extra = 1;                         // large primes appearing squared
};

class Sieve {
public:
    Sieve(const Integer& n, u64 max_work) : n_(n), max_work_(max_work) {}

    std::optional<Integer> run(u64& used);

private:
    bool build_factor_base();
    bool next_a();
    void init_polynomial();
    void next_polynomial(unsigned iteration);
    void sieve_and_collect();
    void try_candidate(std::int64_t x);
    void add_relation(Relation rel, u64 large_prime);
    std::optional<Integer> linear_algebra();

    const Integer n_;
    const u64 max_work_;
    Integer kn_;
    unsigned k_ = 1;
    u32 small_factor_ = 0;

    std::vector<u32> fb_;      // factor base primes; column i + 1 of the matrix
    std::vector<u32> sqrt_kn_; // sqrt(kN) mod p
    std::vector<std::uint8_t> logp_;
    std::size_t sieve_start_ = 0; // first index sieved (small primes skipped)
    u32 half_width_ = 0;
    u64 large_bound_ = 0;
    std::uint8_t threshold_ = 0;

    // Current A and its pieces.
    Integer a_;
    std::vector<std::size_t> a_idx_; // indices into fb_
    std::vector<Integer> b_terms_;
    std::vector<int> b_signs_;
    Integer b_, c_;
    std::vector<u32> ainv_;                // A^{-1} mod p
    std::vector<std::vector<u32>> bainv2_; // 2 B_l A^{-1} mod p
    std::vector<u32> root1_, root2_;
    std::vector<bool> divides_a_;
    std::unordered_set<std::string> used_a_;
    std::mt19937_64 rng_{0x5eedULL};

    std::vector<std::uint8_t> sieve_;
    std::vector<Relation> relations_;
    std::unordered_map<u64, Relation> partials_;
    std::unordered_set<std::string> seen_;
};

bool Sieve::build_factor_base() {
    const auto digits = mpz_sizeinbase(n_.get_mpz_t(), 10);
    const Params p = params_for(digits);
    half_width_ = p.half_width;
    k_ = choose_multiplier(n_);
    kn_ = n_ * k_;

    fb_.push_back(2);
    sqrt_kn_.push_back(static_cast<u32>(mpz_fdiv_ui(kn_.get_mpz_t(), 2)));
    for (u32 q = 3; fb_.size() < p.fb_size; q += 2) {
        bool prime = true;
        for (u32 d = 3; d * d <= q; d += 2)
            if (q % d == 0) {
                prime = false;
                break;
            }
        if (!prime)
            continue;
        const u64 r = mpz_fdiv_ui(kn_.get_mpz_t(), q);
        if (r == 0) {
            if (k_ % q != 0) {
                small_factor_ = q;
                return false;
            }
            fb_.push_back(q);
            sqrt_kn_.push_back(0);
        } else if (powmod(r, (q - 1) / 2, q) == 1) {
            fb_.push_back(q);
            sqrt_kn_.push_back(static_cast<u32>(sqrt_mod(r, q)));
        }
    }
    logp_.resize(fb_.size());
    for (std::size_t i = 0; i < fb_.size(); ++i)
        logp_[i] = static_cast<std::uint8_t>(std::lround(std::log2(static_cast<double>(fb_[i]))));
    while (sieve_start_ < fb_.size() && fb_[sieve_start_] < 40)
        ++sieve_start_;

    const u64 pmax = fb_.back();
    large_bound_ = pmax * 64;
    const double bits = std::log2(static_cast<double>(half_width_)) +
                        0.5 * static_cast<double>(mpz_sizeinbase(kn_.get_mpz_t(), 2)) - 0.5;
    const double t = bits - std::log2(static_cast<double>(large_bound_)) - 4.0;
    threshold_ = static_cast<std::uint8_t>(std::clamp(t, 8.0, 250.0));
    sieve_.assign(2 * static_cast<std::size_t>(half_width_), 0);
    return true;
}

bool Sieve::next_a() {
    // Target A ~ sqrt(2 kN) / M, built from s primes of similar size taken
    // from the upper half of the factor base.
    Integer target;
    mpz_sqrt(target.get_mpz_t(), Integer(2 * kn_).get_mpz_t());
    target /= half_width_;
    const double log_target = static_cast<double>(mpz_sizeinbase(target.get_mpz_t(), 2));

    std::size_t lo = std::max<std::size_t>(sieve_start_ + 1, fb_.size() / 3);
    std::size_t hi = std::max<std::size_t>(lo + 4, (2 * fb_.size()) / 3);
    hi = std::min(hi, fb_.size() - 1);
    const double log_mid = std::log2(static_cast<double>(fb_[(lo + hi) / 2]));
    auto s = static_cast<std::size_t>(std::lround(log_target / log_mid));
    s = std::clamp<std::size_t>(s, 2, 16);
    if (hi - lo < 2 * s)
        lo = sieve_start_ + 1;

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::size_t> idx;
        Integer a = 1;
        while (idx.size() + 1 < s) {
            std::uniform_int_distribution<std::size_t> pick(lo, hi);
            const std::size_t i = pick(rng_);
            if (std::find(idx.begin(), idx.end(), i) != idx.end() || k_ % fb_[i] == 0)
                continue;
            idx.push_back(i);
            a *= fb_[i];
        }
        // Final prime brings A as close to the target as the factor base allows.
        const Integer want = target / a;
        std::size_t best = fb_.size();
        Integer best_gap;
        for (std::size_t i = sieve_start_ + 1; i < fb_.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) != idx.end() || k_ % fb_[i] == 0)
                continue;
            Integer gap = abs(want - fb_[i]);
            if (best == fb_.size() || gap < best_gap) {
                best = i;
                best_gap = gap;
            }
        }
        if (best == fb_.size())
            continue;
        idx.push_back(best);
        a *= fb_[best];
        std::sort(idx.begin(), idx.end());
        std::string key = a.get_str(16);
        if (!used_a_.insert(key).second)
            continue;
        a_ = a;
        a_idx_ = idx;
        return true;
    }
    return false;
}

void Sieve::init_polynomial() {
    const std::size_t s = a_idx_.size();
    b_terms_.assign(s, Integer(0));
    b_signs_.assign(s, 1);
    b_ = 0;
    for (std::size_t l = 0; l < s; ++l) {
        const u32 q = fb_[a_idx_[l]];
        const Integer a_over_q = a_ / q;
        const u64 inv = invmod(mpz_fdiv_ui(a_over_q.get_mpz_t(), q), q);
        u64 gamma = mulmod(sqrt_kn_[a_idx_[l]], inv, q);
        if (gamma > q / 2)
            gamma = q - gamma;
        b_terms_[l] = a_over_q * gamma;
        b_ += b_terms_[l];
    }
    c_ = (b_ * b_ - kn_) / a_;

    const std::size_t f = fb_.size();
    divides_a_.assign(f, false);
    for (auto i : a_idx_)
        divides_a_[i] = true;
    ainv_.assign(f, 0);
    root1_.assign(f, 0);
    root2_.assign(f, 0);
    bainv2_.assign(s, std::vector<u32>(f, 0));
    for (std::size_t i = sieve_start_; i < f; ++i) {
        const u32 p = fb_[i];
        if (divides_a_[i] || k_ % p == 0)
            continue;
        ainv_[i] = static_cast<u32>(invmod(mpz_fdiv_ui(a_.get_mpz_t(), p), p));
        for (std::size_t l = 0; l < s; ++l)
            bainv2_[l][i] = static_cast<u32>(
                mulmod(2 * mpz_fdiv_ui(b_terms_[l].get_mpz_t(), p) % p, ainv_[i], p));
        const u64 bmod = mpz_fdiv_ui(b_.get_mpz_t(), p);
        const u64 t = sqrt_kn_[i];
        root1_[i] = static_cast<u32>(mulmod((t + p - bmod) % p, ainv_[i], p));
        root2_[i] = static_cast<u32>(mulmod((2 * p - t - bmod) % p, ainv_[i], p));
    }
}

void Sieve::next_polynomial(unsigned iteration) {
    const auto v = static_cast<std::size_t>(std::countr_zero(iteration));
    const bool subtract = b_signs_[v] > 0;
    if (subtract)
        b_ -= 2 * b_terms_[v];
    else
        b_ += 2 * b_terms_[v];
    b_signs_[v] = -b_signs_[v];
    c_ = (b_ * b_ - kn_) / a_;
    for (std::size_t i = sieve_start_; i < fb_.size(); ++i) {
        if (divides_a_[i] || k_ % fb_[i] == 0)
            continue;
        const u32 p = fb_[i];
        const u32 d = bainv2_[v][i];
        // B -> B - 2B_v moves roots by +2 B_v / A; B -> B + 2B_v by the opposite.
        if (subtract) {
            root1_[i] = static_cast<u32>((root1_[i] + d) % p);
            root2_[i] = static_cast<u32>((root2_[i] + d) % p);
        } else {
            root1_[i] = static_cast<u32>((root1_[i] + p - d) % p);
            root2_[i] = static_cast<u32>((root2_[i] + p - d) % p);
        }
    }
}

void Sieve::sieve_and_collect() {
    std::fill(sieve_.begin(), sieve_.end(), 0);
    const u64 width = sieve_.size();
    for (std::size_t i = sieve_start_; i < fb_.size(); ++i) {
        if (divides_a_[i] || k_ % fb_[i] == 0)
            continue;
        const u32 p = fb_[i];
        const std::uint8_t lg = logp_[i];
        const u64 shift = half_width_ % p;
        u64 j1 = (root1_[i] + shift) % p;
        u64 j2 = (root2_[i] + shift) % p;
        for (u64 j = j1; j < width; j += p)
            sieve_[j] += lg;
        if (j2 != j1)
            for (u64 j = j2; j < width; j += p)
                sieve_[j] += lg;
    }
    for (u64 j = 0; j < width; ++j)
        if (sieve_[j] >= threshold_)
            try_candidate(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(half_width_));
}

void Sieve::try_candidate(std::int64_t x) {
    const Integer xx(static_cast<long>(x));
    Integer g = (a_ * xx + 2 * b_) * xx + c_;
    if (g == 0)
        return;
    Relation rel;
    if (g < 0) {
        rel.exponents.emplace_back(0, 1);
        g = -g;
    }
    for (std::size_t i = 0; i < fb_.size(); ++i) {
        const u32 p = fb_[i];
        u32 e = divides_a_[i] ? 1 : 0; // A contributes each q_l once
        bool test = i < sieve_start_ || divides_a_[i] || k_ % p == 0;
        if (!test) {
            std::int64_t r = x % static_cast<std::int64_t>(p);
            if (r < 0)
                r += p;
            test = static_cast<u32>(r) == root1_[i] || static_cast<u32>(r) == root2_[i];
        }
        if (test)
            while (mpz_divisible_ui_p(g.get_mpz_t(), p) != 0) {
                mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
                ++e;
            }
        if (e != 0)
            rel.exponents.emplace_back(static_cast<u32>(i + 1), e);
    }
    if (g != 1 && !(g.fits_ulong_p() && g.get_ui() < large_bound_))
        return;
    rel.x = (a_ * xx + b_) % n_;
    if (rel.x < 0)
        rel.x += n_;
    add_relation(std::move(rel), g.get_ui());
}

void Sieve::add_relation(Relation rel, u64 large_prime) {
    if (!seen_.insert(rel.x.get_str(16)).second)
        return;
    if (large_prime == 1) {
        relations_.push_back(std::move(rel));
        return;
    }
    auto it = partials_.find(large_prime);
    if (it == partials_.end()) {
        partials_.emplace(large_prime, std::move(rel));
        return;
    }
    // Two partials sharing a large prime multiply to a full relation whose
    // right side contains that prime squared.
    const Relation& other = it->second;
    Relation merged;
    merged.x = (rel.x * other.x) % n_;
    std::map<u32, u32> exps;
    for (auto [c, e] : rel.exponents)
        exps[c] += e;
    for (auto [c, e] : other.exponents)
        exps[c] += e;
    merged.exponents.assign(exps.begin(), exps.end());
    merged.extra = Integer(static_cast<unsigned long>(large_prime));
    relations_.push_back(std::move(merged));
}

std::optional<Integer> Sieve::linear_algebra() {
    const std::size_t cols = fb_.size() + 1;
    const std::size_t rows = relations_.size();
    const std::size_t left_words = (cols + 63) / 64;
    const std::size_t right_words = (rows + 63) / 64;
    const std::size_t words = left_words + right_words;
    std::vector<u64> m(rows * words, 0);
    auto row = [&](std::size_t r) { return m.data() + r * words; };
    for (std::size_t r = 0; r < rows; ++r) {
        for (auto [c, e] : relations_[r].exponents)
            if (e & 1U)
                row(r)[c / 64] ^= u64{1} << (c % 64);
        row(r)[left_words + r / 64] |= u64{1} << (r % 64);
    }

    std::vector<bool> pivoted(rows, false);
    for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t w = c / 64;
        const u64 bit = u64{1} << (c % 64);
        std::size_t pivot = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (!pivoted[r] && (row(r)[w] & bit)) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        pivoted[pivot] = true;
        const u64* src = row(pivot);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot || !(row(r)[w] & bit))
                continue;
            u64* dst = row(r);
            for (std::size_t k = w; k < words; ++k)
                dst[k] ^= src[k];
        }
    }

    for (std::size_t r = 0; r < rows; ++r) {
        if (pivoted[r])
            continue;
        bool zero = true;
        for (std::size_t k = 0; k < left_words && zero; ++k)
            zero = row(r)[k] == 0;
        if (!zero)
            continue;
        Integer x = 1;
        Integer y = 1;
        std::vector<u64> exps(cols, 0);
        for (std::size_t j = 0; j < rows; ++j) {
            if (!(row(r)[left_words + j / 64] & (u64{1} << (j % 64))))
                continue;
            x = (x * relations_[j].x) % n_;
            y = (y * relations_[j].extra) % n_;
            for (auto [c, e] : relations_[j].exponents)
                exps[c] += e;
        }
        for (std::size_t c = 1; c < cols; ++c) {
            if (exps[c] == 0)
                continue;
            Integer pw;
            const Integer base(fb_[c - 1]);
            mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), exps[c] / 2, n_.get_mpz_t());
            y = (y * pw) % n_;
        }
        Integer g;
        const Integer diff = x - y;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n_.get_mpz_t());
        if (g != 1 && g != n_)
            return g;
    }
    return std::nullopt;
}

std::optional<Integer> Sieve::run(u64& used) {
    used = 0;
    if (!build_factor_base())
        return Integer(small_factor_);
    for (u32 p : fb_)
        if (k_ % p != 0 && mpz_divisible_ui_p(n_.get_mpz_t(), p) != 0)
            return Integer(p);

    const u64 cost_per_poly = std::max<u64>(1, sieve_.size() / 1024);
    auto collect = [&](std::size_t target) {
        while (relations_.size() < target) {
            if (!next_a())
                return false;
            init_polynomial();
            const unsigned count = 1U << (a_idx_.size() - 1);
            for (unsigned it = 0; it < count; ++it) {
                if (used + cost_per_poly > max_work_)
                    return false;
                used += cost_per_poly;
                if (it != 0)
                    next_polynomial(it);
                sieve_and_collect();
            }
        }
        return true;
    };

    std::size_t target = fb_.size() + 40;
    for (;;) {
        if (!collect(target))
            return std::nullopt;
        if (auto f = linear_algebra())
            return f;
        // Every dependency was trivial; gather more and retry.
        target = relations_.size() + 64;
    }
}

} // namespace

std::optional<Integer> siqs(const Integer& n, std::uint64_t max_work, std::uint64_t* used) {
    Sieve sieve(n, max_work);
    u64 spent = 0;
    auto result = sieve.run(spent);
    if (used != nullptr)
        *used = spent;
    return result;
}

} // namespace fibalg
