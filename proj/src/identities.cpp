#include "fibalg/identities.hpp"

#include <array>
#include <chrono>
#include <string>

#include "fibalg/error.hpp"

namespace fibalg {

namespace {

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view statement;
    SeqIndex domain_min;
};

constexpr std::array<IdentityInfo, 16> kIdentities{{
    {IdentityId::P21_I, "P21_I", "5 | f_n <=> 5 | n", 0},
    {IdentityId::P21_II, "P21_II", "f_{2n} = l_n f_n", 0},
    {IdentityId::P21_III, "P21_III", "f_n^2 + f_{n+1}^2 = f_{2n+1}", 0},
    {IdentityId::P21_IV, "P21_IV", "f_n^2 - f_{n+1} f_{n-1} = (-1)^{n-1}", 1},
    {IdentityId::P21_V, "P21_V", "f_{-n} = (-1)^{n+1} f_n", 0},
    {IdentityId::P21_VI, "P21_VI", "l_{-n} = (-1)^n l_n", 0},
    {IdentityId::P21_VII, "P21_VII", "l_n^2 = 5 f_n^2 + 4 (-1)^n", 0},
    {IdentityId::P21_VIII, "P21_VIII", "l_{2n} = l_n^2 + 2 (-1)^{n+1}", 0},
    {IdentityId::P21_IX, "P21_IX", "l_{2n} l_{2n+2} - 5 f_{2n+1}^2 = 1", 0},
    {IdentityId::P21_X, "P21_X", "f_{2n} + f_n^2 = 2 f_n f_{n+1}", 0},
    {IdentityId::P21_XI, "P21_XI", "f_{2n} - f_n^2 = 2 f_n f_{n-1}", 1},
    {IdentityId::P21_XII, "P21_XII", "l_n^2 - f_n^2 = 4 f_{n-1} f_{n+1}", 1},
    {IdentityId::P21_XIII, "P21_XIII", "f_{2n} = f_{n+1}^2 - f_{n-1}^2", 1},
    {IdentityId::P21_XIV, "P21_XIV", "l_{4n} = 5 f_{2n}^2 + 2", 0},
    {IdentityId::P35_2, "P35_2", "5 (f_{2n+1} + f_{2n+5}) = l_{2n} + l_{2n+2} + l_{2n+4} + l_{2n+6}", 0},
    {IdentityId::P21_IX_AS_PRINTED, "P21_IX_AS_PRINTED", "l_{2n} l_{2n+2} - 5 f_{n+1}^2 = 1", 0},
}};

const IdentityInfo& info(IdentityId id) {
    for (const auto& entry : kIdentities)
        if (entry.id == id)
            return entry;
    throw InvalidInput("unknown identity id");
}

// Negative-index values through powers of Q^{-1} = [[0, 1], [1, -1]]:
// Q^{-m} = [[f_{1-m}, f_{-m}], [f_{-m}, f_{-m-1}]]. Kept apart from the
// sign rule used by fib()/lucas() so that clauses v and vi compare two
// different routes.
struct Mat2 {
    Integer a, b, c, d;
};

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

Mat2 inverse_q_power(SeqIndex m) {
    Mat2 result{1, 0, 0, 1};
    Mat2 base{0, 1, 1, -1};
    for (auto e = static_cast<std::uint64_t>(m); e != 0; e >>= 1) {
        if (e & 1U)
            result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

CheckResult equal_sides(SeqIndex n, Integer lhs, Integer rhs) {
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs), n};
}

} // namespace

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> out;
        for (const auto& entry : kIdentities)
            out.push_back(entry.id);
        return out;
    }();
    return ids;
}

std::string_view identity_name(IdentityId id) {
    return info(id).name;
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    for (const auto& entry : kIdentities)
        if (entry.name == name)
            return entry.id;
    return std::nullopt;
}

std::string_view identity_statement(IdentityId id) {
    return info(id).statement;
}

SeqIndex identity_domain_min(IdentityId id) {
    return info(id).domain_min;
}

CheckResult check_identity(IdentityId id, SeqIndex n) {
    const auto& entry = info(id);
    if (n < entry.domain_min)
        throw InvalidInput(std::string(entry.name) + " requires n >= " +
                           std::to_string(entry.domain_min) + ", got n = " + std::to_string(n));
    check_index(n);

    const int sign_n = neg_one_pow(n);
    switch (id) {
    case IdentityId::P21_I: {
        Integer f_mod = fib(n) % 5;
        if (f_mod < 0)
            f_mod += 5;
        Integer n_mod = from_int(n % 5);
        const bool holds = (f_mod == 0) == (n_mod == 0);
        return {holds, f_mod, n_mod, n};
    }
    case IdentityId::P21_II:
        return equal_sides(n, fib(2 * n), lucas(n) * fib(n));
    case IdentityId::P21_III: {
        auto [f0, f1] = fib_pair(n);
        return equal_sides(n, f0 * f0 + f1 * f1, fib(2 * n + 1));
    }
    case IdentityId::P21_IV: {
        const Integer f = fib(n);
        return equal_sides(n, f * f - fib(n + 1) * fib(n - 1), Integer(-sign_n));
    }
    case IdentityId::P21_V: {
        const Mat2 m = inverse_q_power(n);
        return equal_sides(n, m.b, neg_one_pow(n + 1) * fib(n));
    }
    case IdentityId::P21_VI: {
        const Mat2 m = inverse_q_power(n);
        // l_{-n} = f_{-n-1} + f_{-n+1}
        return equal_sides(n, m.a + m.d, sign_n * lucas(n));
    }
    case IdentityId::P21_VII: {
        const Integer l = lucas(n);
        const Integer f = fib(n);
        return equal_sides(n, l * l, 5 * f * f + 4 * sign_n);
    }
    case IdentityId::P21_VIII: {
        const Integer l = lucas(n);
        return equal_sides(n, lucas(2 * n), l * l - 2 * sign_n);
    }
    case IdentityId::P21_IX: {
        const Integer f = fib(2 * n + 1);
        return equal_sides(n, lucas(2 * n) * lucas(2 * n + 2), 5 * f * f + 1);
    }
    case IdentityId::P21_IX_AS_PRINTED: {
        const Integer f = fib(n + 1);
        return equal_sides(n, lucas(2 * n) * lucas(2 * n + 2), 5 * f * f + 1);
    }
    case IdentityId::P21_X: {
        auto [f0, f1] = fib_pair(n);
        return equal_sides(n, fib(2 * n) + f0 * f0, 2 * f0 * f1);
    }
    case IdentityId::P21_XI: {
        const Integer f = fib(n);
        return equal_sides(n, fib(2 * n) - f * f, 2 * f * fib(n - 1));
    }
    case IdentityId::P21_XII: {
        const Integer l = lucas(n);
        const Integer f = fib(n);
        return equal_sides(n, l * l - f * f, 4 * fib(n - 1) * fib(n + 1));
    }
    case IdentityId::P21_XIII: {
        const Integer up = fib(n + 1);
        const Integer down = fib(n - 1);
        return equal_sides(n, fib(2 * n), up * up - down * down);
    }
    case IdentityId::P21_XIV: {
        const Integer f = fib(2 * n);
        return equal_sides(n, lucas(4 * n), 5 * f * f + 2);
    }
    case IdentityId::P35_2:
        return equal_sides(n, 5 * (fib(2 * n + 1) + fib(2 * n + 5)),
                           lucas(2 * n) + lucas(2 * n + 2) + lucas(2 * n + 4) + lucas(2 * n + 6));
    }
    throw InvalidInput("unknown identity id");
}

Report verify_range(IdentityId id, SeqIndex n_lo, SeqIndex n_hi) {
    if (n_lo > n_hi)
        throw InvalidInput("empty range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]");
    const SeqIndex domain_min = identity_domain_min(id);
    if (n_lo < domain_min)
        throw InvalidInput(std::string(identity_name(id)) + " requires n >= " +
                           std::to_string(domain_min) + ", range starts at " + std::to_string(n_lo));
    check_index(n_hi);

    const auto start = std::chrono::steady_clock::now();
    Report report{id, n_lo, n_hi, 0, {}, 0.0};
    for (SeqIndex n = n_lo; n <= n_hi; ++n) {
        CheckResult r = check_identity(id, n);
        ++report.checked;
        if (!r.holds)
            report.failures.push_back({n, std::move(r.lhs), std::move(r.rhs)});
    }
    const auto stop = std::chrono::steady_clock::now();
    report.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

nlohmann::json to_json(const Report& report, bool include_timing) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"n", f.n}, {"lhs", to_string(f.lhs)}, {"rhs", to_string(f.rhs)}});
    nlohmann::json out = {
        {"identity", std::string(identity_name(report.identity))},
        {"range", {report.n_lo, report.n_hi}},
        {"checked", report.checked},
        {"failures", std::move(failures)},
    };
    if (include_timing)
        out["millis"] = report.millis;
    return out;
}

Integer f5_factor(SeqIndex n) {
    if (n < 0)
        throw InvalidInput("f5_factor: negative index " + std::to_string(n));
    if (n > kMaxSeqIndex / 5)
        throw InvalidInput("f5_factor: 5n exceeds the index bound");
    Integer k;
    const Integer f = fib(5 * n);
    mpz_divexact_ui(k.get_mpz_t(), f.get_mpz_t(), 5);
    return k;
}

bool in_ring_A(const Integer& x) {
    return mpz_divisible_ui_p(x.get_mpz_t(), 5) != 0;
}

Integer m_element(const std::vector<MTerm>& terms) {
    if (terms.empty())
        throw InvalidInput("m_element: empty term list");
    Integer sum = 0;
    for (const auto& t : terms) {
        if (t.n < 0)
            throw InvalidInput("m_element: negative index " + std::to_string(t.n));
        sum += t.p * fib(5 * t.n) + 5 * t.q * lucas(5 * t.n + 1);
    }
    return sum;
}

Integer m_term_as_printed(const MTerm& term) {
    if (term.n < 0)
        throw InvalidInput("m_term_as_printed: negative index " + std::to_string(term.n));
    return gen_fib_lucas(term.p, 5 * term.q, 5 * term.n);
}

bool in_ideal_M(const Integer& x) {
    return mpz_divisible_ui_p(x.get_mpz_t(), 5) != 0;
}

} // namespace fibalg
