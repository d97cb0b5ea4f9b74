#include "fibalg/splitcert.hpp"

#include <array>
#include <string>

#include "fibalg/error.hpp"

namespace fibalg {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    SeqIndex min_index;
    // Symbolic forms of a, b, x0, y0, z0 for diagnostics.
    std::array<std::string_view, 5> formulas;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::F1, "1", 0, {"f_{10n+5}", "-1", "1", "f_{5n+2}", "f_{5n+3}"}},
    {Family::F2, "2", 1, {"l_{20n}/5", "-2/5", "1", "1", "f_{10n}"}},
    {Family::F3, "3", 2, {"f_{n+1} f_{n-1}", "(-1)^{n-1}", "1", "1", "f_n"}},
    {Family::F4, "4", 1, {"5", "(-1)^n", "f_n", "2", "l_n"}},
    {Family::F5, "5", 0, {"l_{2n} l_{2n+2}", "-5", "1", "f_{2n+1}", "1"}},
    {Family::F6, "6", 1, {"2 f_n f_{n+1}", "-f_{2n}", "1", "1", "f_n"}},
    {Family::F7, "7", 2, {"f_{2n}", "-2 f_n f_{n-1}", "1", "1", "f_n"}},
    {Family::F8a, "8a", 2, {"f_{n-1} f_{n+1}", "f_n^2", "2", "1", "l_n"}},
    {Family::F8b, "8b", 2, {"1", "-f_{n-1} f_{n+1}", "l_n", "2", "f_n"}},
    {Family::F9, "9", 2, {"f_{2n}", "1", "1", "f_{n-1}", "f_{n+1}"}},
}};

const FamilyInfo& info(Family f) {
    for (const auto& entry : kFamilies)
        if (entry.family == f)
            return entry;
    throw InvalidInput("unknown certificate family");
}

struct RawCertificate {
    Rational a, b, x, y, z;
};

RawCertificate evaluate(Family f, SeqIndex n) {
    auto q = [](const Integer& v) { return Rational(v); };
    const Rational one(1);
    switch (f) {
    case Family::F1:
        return {q(fib(10 * n + 5)), Rational(-1), one, q(fib(5 * n + 2)), q(fib(5 * n + 3))};
    case Family::F2: {
        Rational a(lucas(20 * n), 5);
        a.canonicalize();
        return {a, Rational(-2, 5), one, one, q(fib(10 * n))};
    }
    case Family::F3:
        return {q(fib(n + 1) * fib(n - 1)), Rational(neg_one_pow(n - 1)), one, one, q(fib(n))};
    case Family::F4:
        return {Rational(5), Rational(neg_one_pow(n)), q(fib(n)), Rational(2), q(lucas(n))};
    case Family::F5:
        return {q(lucas(2 * n) * lucas(2 * n + 2)), Rational(-5), one, q(fib(2 * n + 1)), one};
    case Family::F6:
        return {q(2 * fib(n) * fib(n + 1)), q(-fib(2 * n)), one, one, q(fib(n))};
    case Family::F7:
        return {q(fib(2 * n)), q(-2 * fib(n) * fib(n - 1)), one, one, q(fib(n))};
    case Family::F8a: {
        const Integer f = fib(n);
        return {q(fib(n - 1) * fib(n + 1)), q(f * f), Rational(2), one, q(lucas(n))};
    }
    case Family::F8b:
        return {one, q(-fib(n - 1) * fib(n + 1)), q(lucas(n)), Rational(2), q(fib(n))};
    case Family::F9:
        return {q(fib(2 * n)), one, one, q(fib(n - 1)), q(fib(n + 1))};
    }
    throw InvalidInput("unknown certificate family");
}

bool is_square(const Integer& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

} // namespace

ConicSpec::ConicSpec(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    if (a_ == 0 || b_ == 0)
        throw InvalidInput("conic parameters must be nonzero");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& entry : kFamilies)
            out.push_back(entry.family);
        return out;
    }();
    return families;
}

std::string_view family_name(Family f) {
    return info(f).name;
}

std::optional<Family> parse_family(std::string_view text) {
    for (const auto& entry : kFamilies)
        if (entry.name == text)
            return entry.family;
    return std::nullopt;
}

SeqIndex family_min_index(Family f) {
    return info(f).min_index;
}

Certificate certificate_family(Family f, SeqIndex n) {
    const auto& entry = info(f);
    if (n < 0)
        throw InvalidInput("family " + std::string(entry.name) + ": negative index " + std::to_string(n));
    RawCertificate raw = evaluate(f, n);
    if (n < entry.min_index) {
        static constexpr std::array<std::string_view, 5> roles{"parameter a", "parameter b", "x0", "y0",
                                                              "z0"};
        const std::array<const Rational*, 5> values{&raw.a, &raw.b, &raw.x, &raw.y, &raw.z};
        std::string what = "degenerate";
        for (std::size_t i = 0; i < values.size(); ++i)
            if (*values[i] == 0) {
                what = std::string(roles[i]) + " = " + std::string(entry.formulas[i]) + " vanishes";
                break;
            }
        throw InvalidInput("family " + std::string(entry.name) + " requires n >= " +
                           std::to_string(entry.min_index) + " (at n = " + std::to_string(n) + ", " +
                           what + ")");
    }
    return {f, n, ConicSpec(raw.a, raw.b), RationalPoint{raw.x, raw.y, raw.z}};
}

bool verify_point(const ConicSpec& spec, const RationalPoint& pt, bool strict) {
    if (pt.is_zero())
        return false;
    if (strict && (pt.x == 0 || pt.y == 0 || pt.z == 0))
        return false;
    return spec.a() * pt.x * pt.x + spec.b() * pt.y * pt.y == pt.z * pt.z;
}

std::optional<RationalPoint> search_point(const ConicSpec& spec, std::int64_t height) {
    if (height < 1 || height > kMaxSearchHeight)
        throw InvalidInput("search height must be in [1, " + std::to_string(kMaxSearchHeight) + "]");
    // a = an/ad, b = bn/bd  =>  (an bd) x^2 + (bn ad) y^2 = (ad bd) z^2.
    const Integer ca = spec.a().get_num() * spec.b().get_den();
    const Integer cb = spec.b().get_num() * spec.a().get_den();
    const Integer cz = spec.a().get_den() * spec.b().get_den();
    const Integer limit(static_cast<long>(height));
    Integer lhs, quotient, root;
    for (std::int64_t x = 0; x <= height; ++x) {
        const Integer xx(static_cast<long>(x));
        for (std::int64_t y = 0; y <= height; ++y) {
            if (x == 0 && y == 0)
                continue; // forces z = 0
            const Integer yy(static_cast<long>(y));
            lhs = ca * xx * xx + cb * yy * yy;
            if (lhs < 0 || mpz_divisible_p(lhs.get_mpz_t(), cz.get_mpz_t()) == 0)
                continue;
            mpz_divexact(quotient.get_mpz_t(), lhs.get_mpz_t(), cz.get_mpz_t());
            if (!is_square(quotient))
                continue;
            mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
            if (root > limit)
                continue;
            return RationalPoint{Rational(xx), Rational(yy), Rational(root)};
        }
    }
    return std::nullopt;
}

nlohmann::json to_json(const Certificate& cert, bool verified, bool strict) {
    return {
        {"family", std::string(family_name(cert.family))},
        {"n", cert.n},
        {"a", to_string(cert.conic.a())},
        {"b", to_string(cert.conic.b())},
        {"point", {to_string(cert.point.x), to_string(cert.point.y), to_string(cert.point.z)}},
        {"verified", verified},
        {"strict", strict},
    };
}

} // namespace fibalg
