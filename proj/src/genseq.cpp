#include "fibalg/genseq.hpp"

#include <cmath>
#include <string>

#include "fibalg/error.hpp"

namespace fibalg {

namespace {

void check_bound(std::int64_t n, std::int64_t bound, const char* what) {
    if (n < 0 || n > bound)
        throw InvalidInput(std::string(what) + ": index " + std::to_string(n) + " outside [0, " +
                           std::to_string(bound) + "]");
}

} // namespace

Rational relation_seq(const LinearRelation& rel, const Rational& a0, const Rational& b1, Side side,
                      std::int64_t n) {
    check_bound(n, kMaxRelationIndex, "relation_seq");
    if (n == 0)
        return a0;
    // Left: A phi_{n-1} + B phi_{n-2}; Right: A phi_{n-2} + B phi_{n-1}.
    const Rational& w_newer = side == Side::Left ? rel.A : rel.B;
    const Rational& w_older = side == Side::Left ? rel.B : rel.A;
    Rational older = a0;
    Rational newer = b1;
    for (std::int64_t k = 2; k <= n; ++k) {
        Rational next = w_newer * newer + w_older * older;
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

CharacteristicRoots characteristic_roots(const LinearRelation& rel) {
    const Rational delta = rel.discriminant();
    if (delta <= 0)
        throw InvalidInput("discriminant A^2 + 4B = " + to_string(delta) +
                           " is not positive; complex roots are not supported");
    const QuadExt root = QuadExt::sqrt(delta);
    const QuadExt a = QuadExt::rational(rel.A, root.radicand());
    const QuadExt half = QuadExt::rational(Rational(1, 2), root.radicand());
    return {(a + root) * half, (a - root) * half};
}

QuadExt binet_general(const LinearRelation& rel, const Rational& a0, const Rational& b1, std::int64_t n) {
    check_bound(n, kMaxBinetIndex, "binet_general");
    const auto [alpha, beta] = characteristic_roots(rel);
    const Integer& d = alpha.radicand();
    const QuadExt a = QuadExt::rational(a0, d);
    const QuadExt b = QuadExt::rational(b1, d);
    const auto e = static_cast<std::uint64_t>(n);
    return ((-b + a * beta) * alpha.pow(e) + (b - a * alpha) * beta.pow(e)) / (beta - alpha);
}

RatioLimit ratio_limit(const LinearRelation& rel, const Rational& a0, const Rational& b1) {
    const auto [alpha, beta] = characteristic_roots(rel);
    // |alpha| - |beta| has the sign of A once D > 0.
    if (rel.A == 0)
        throw InvalidInput("|alpha| = |beta| (A = 0): consecutive ratios do not converge");
    if (rel.A < 0)
        throw InvalidInput("|beta| > |alpha| (A < 0): the dominant root is beta, not max{alpha, beta}");
    const Integer& d = alpha.radicand();
    const QuadExt coeff = -QuadExt::rational(b1, d) + QuadExt::rational(a0, d) * beta;
    if (coeff.is_zero())
        throw InvalidInput("degenerate seeds: -b + a*beta = 0, the sequence follows beta^n");

    const Rational phi200 = relation_seq(rel, a0, b1, Side::Left, 200);
    const Rational phi201 = relation_seq(rel, a0, b1, Side::Left, 201);
    if (phi200 == 0)
        throw InvalidInput("phi_200 = 0; empirical ratio undefined");
    const double limit = (rel.A.get_d() + std::sqrt(rel.discriminant().get_d())) / 2.0;
    const Rational ratio = phi201 / phi200;
    const double empirical = ratio.get_d();
    return {limit, empirical, std::fabs(empirical - limit)};
}

Integer d_minus_one(const DTypeSpec& spec) {
    if (spec.b == 0)
        throw InvalidInput("d_{-1} undefined: b = 0");
    const Integer num = spec.d1 - spec.a * spec.d0;
    if (mpz_divisible_p(num.get_mpz_t(), spec.b.get_mpz_t()) == 0)
        throw InvalidInput("d_{-1} = (" + to_string(num) + ")/" + to_string(spec.b) + " is not an integer");
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), spec.b.get_mpz_t());
    return q;
}

std::vector<Integer> d_trail(const DTypeSpec& spec, SeqIndex n) {
    if (n < -1)
        throw InvalidInput("d_seq: index " + std::to_string(n) + " below -1");
    check_index(n);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n + 2));
    out.push_back(d_minus_one(spec));
    if (n >= 0)
        out.push_back(spec.d0);
    if (n >= 1)
        out.push_back(spec.d1);
    for (SeqIndex k = 2; k <= n; ++k) {
        const std::size_t i = out.size();
        out.push_back(spec.a * out[i - 1] + spec.b * out[i - 2]);
    }
    return out;
}

Integer d_seq(const DTypeSpec& spec, SeqIndex n) {
    if (n < -1)
        throw InvalidInput("d_seq: index " + std::to_string(n) + " below -1");
    check_index(n);
    if (n == -1)
        return d_minus_one(spec);
    if (n == 0)
        return spec.d0;
    Integer older = spec.d0;
    Integer newer = spec.d1;
    for (SeqIndex k = 2; k <= n; ++k) {
        Integer next = spec.a * newer + spec.b * older;
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

} // namespace fibalg
