#include "fibalg/quaternion.hpp"

#include <string>

#include "fibalg/error.hpp"

namespace fibalg {

AlgebraParams::AlgebraParams(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ == 0 || beta_ == 0)
        throw InvalidInput("quaternion algebra parameters must be nonzero");
}

Quaternion::Quaternion(AlgebraParams params) : params_(std::move(params)), c_{0, 0, 0, 0} {}

Quaternion::Quaternion(AlgebraParams params, Coeffs coeffs)
    : params_(std::move(params)), c_(std::move(coeffs)) {
    for (auto& c : c_)
        c.canonicalize();
}

Quaternion Quaternion::basis(AlgebraParams params, int i) {
    if (i < 0 || i > 3)
        throw InvalidInput("basis index must be in 0..3");
    Quaternion q(std::move(params));
    q.c_[static_cast<std::size_t>(i)] = 1;
    return q;
}

void Quaternion::require_same_algebra(const Quaternion& other) const {
    if (!(params_ == other.params_))
        throw InvalidInput("quaternions belong to different algebras H(" + to_string(params_.alpha()) +
                           ", " + to_string(params_.beta()) + ") and H(" +
                           to_string(other.params_.alpha()) + ", " + to_string(other.params_.beta()) +
                           ")");
}

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
    require_same_algebra(rhs);
    for (std::size_t i = 0; i < 4; ++i)
        c_[i] += rhs.c_[i];
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
    require_same_algebra(rhs);
    for (std::size_t i = 0; i < 4; ++i)
        c_[i] -= rhs.c_[i];
    return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& rhs) {
    require_same_algebra(rhs);
    const Rational& al = params_.alpha();
    const Rational& be = params_.beta();
    const auto& [a1, a2, a3, a4] = c_;
    const auto& [b1, b2, b3, b4] = rhs.c_;
    Coeffs r{
        a1 * b1 + al * a2 * b2 + be * a3 * b3 - al * be * a4 * b4,
        a1 * b2 + a2 * b1 - be * a3 * b4 + be * a4 * b3,
        a1 * b3 + a3 * b1 + al * a2 * b4 - al * a4 * b2,
        a1 * b4 + a4 * b1 + a2 * b3 - a3 * b2,
    };
    c_ = std::move(r);
    return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
    for (auto& c : c_)
        c *= s;
    return *this;
}

Quaternion Quaternion::operator-() const {
    Quaternion out(*this);
    for (auto& c : out.c_)
        c = -c;
    return out;
}

Quaternion quat_add(const Quaternion& x, const Quaternion& y) {
    return x + y;
}

Quaternion quat_sub(const Quaternion& x, const Quaternion& y) {
    return x - y;
}

Quaternion quat_mul(const Quaternion& x, const Quaternion& y) {
    return x * y;
}

Quaternion quat_conj(const Quaternion& x) {
    const auto& c = x.coeffs();
    return Quaternion(x.params(), {c[0], -c[1], -c[2], -c[3]});
}

Rational quat_trace(const Quaternion& x) {
    return 2 * x[0];
}

Rational quat_norm(const Quaternion& x) {
    const Rational& al = x.params().alpha();
    const Rational& be = x.params().beta();
    const auto& [a1, a2, a3, a4] = x.coeffs();
    return a1 * a1 - al * a2 * a2 - be * a3 * a3 + al * be * a4 * a4;
}

namespace {

template <typename Seq>
Quaternion consecutive_quaternion(SeqIndex n, const AlgebraParams& params, Seq seq, const char* what) {
    if (n < 0)
        throw InvalidInput(std::string(what) + ": negative index " + std::to_string(n));
    check_index(n + 3);
    return Quaternion(params, {Rational(seq(n)), Rational(seq(n + 1)), Rational(seq(n + 2)),
                               Rational(seq(n + 3))});
}

Integer integral(const Rational& r) {
    // Norms of integral quaternions in H(-1,-1) are integers.
    return r.get_num();
}

} // namespace

Quaternion fib_quaternion(SeqIndex n, const AlgebraParams& params) {
    return consecutive_quaternion(n, params, fib, "fib_quaternion");
}

Quaternion lucas_quaternion(SeqIndex n, const AlgebraParams& params) {
    return consecutive_quaternion(n, params, lucas, "lucas_quaternion");
}

CheckResult norm_relation_check(SeqIndex n, NormRelation which) {
    const auto h = AlgebraParams::hamilton();
    const Quaternion f = fib_quaternion(n, h);
    const Quaternion l = lucas_quaternion(n, h);
    const Integer norm_f = integral(quat_norm(f));
    const Integer norm_l = integral(quat_norm(l));

    Integer lhs;
    Integer rhs;
    switch (which) {
    case NormRelation::P35_1:
        lhs = 5 * norm_f;
        rhs = norm_l;
        break;
    case NormRelation::P35_3:
        // At n = 0 the f_{-1} term resolves through the signed-index rule.
        lhs = integral(quat_norm(f + l));
        rhs = norm_f + norm_l + 2 * (fib(2 * n + 7) - fib(2 * n - 1));
        break;
    }
    const bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs), n};
}

nlohmann::json to_json(const Quaternion& x) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(to_string(c));
    return {{"alpha", to_string(x.params().alpha())},
            {"beta", to_string(x.params().beta())},
            {"coeffs", std::move(coeffs)}};
}

} // namespace fibalg
