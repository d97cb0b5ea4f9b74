#pragma once

#include <array>

#include <json.hpp>

#include "fibalg/identities.hpp"
#include "fibalg/numeric.hpp"
#include "fibalg/seqcore.hpp"

namespace fibalg {

/// Structure constants (alpha, beta) of the quaternion algebra H(alpha, beta)
/// over Q: e1^2 = alpha, e2^2 = beta, e3 = e1 e2.
class AlgebraParams {
public:
    /// Throws InvalidInput if either parameter is zero.
    AlgebraParams(Rational alpha, Rational beta);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    /// H(-1, -1), the Hamilton quaternions.
    static AlgebraParams hamilton() { return {Rational(-1), Rational(-1)}; }

    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

private:
    Rational alpha_;
    Rational beta_;
};

/// a1 + a2 e1 + a3 e2 + a4 e3 in H(alpha, beta).
///
/// Multiplication follows the table
///
///        |  e1      e2      e3
///     ---+----------------------
///     e1 |  alpha   e3      alpha e2
///     e2 | -e3      beta   -beta e1
///     e3 | -alpha e2  beta e1  -alpha beta
///
/// Binary operations require both operands to live in the same algebra.
class Quaternion {
public:
    using Coeffs = std::array<Rational, 4>;

    explicit Quaternion(AlgebraParams params);
    Quaternion(AlgebraParams params, Coeffs coeffs);

    /// The basis element e_i (i = 0 gives 1, i = 1..3 give e1..e3).
    static Quaternion basis(AlgebraParams params, int i);

    const AlgebraParams& params() const { return params_; }
    const Coeffs& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    bool is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    Quaternion& operator+=(const Quaternion& rhs);
    Quaternion& operator-=(const Quaternion& rhs);
    Quaternion& operator*=(const Quaternion& rhs);
    Quaternion& operator*=(const Rational& s);

    friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
    friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
    friend Quaternion operator*(Quaternion lhs, const Quaternion& rhs) { return lhs *= rhs; }
    friend Quaternion operator*(Quaternion lhs, const Rational& s) { return lhs *= s; }
    friend Quaternion operator*(const Rational& s, Quaternion rhs) { return rhs *= s; }
    Quaternion operator-() const;

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

private:
    void require_same_algebra(const Quaternion& other) const;

    AlgebraParams params_;
    Coeffs c_;
};

Quaternion quat_add(const Quaternion& x, const Quaternion& y);
Quaternion quat_sub(const Quaternion& x, const Quaternion& y);
Quaternion quat_mul(const Quaternion& x, const Quaternion& y);

/// Negates the e1, e2, e3 parts.
Quaternion quat_conj(const Quaternion& x);

/// x + conj(x) = 2 a1.
Rational quat_trace(const Quaternion& x);

/// a1^2 - alpha a2^2 - beta a3^2 + alpha beta a4^2.
Rational quat_norm(const Quaternion& x);

/// f_n + f_{n+1} e1 + f_{n+2} e2 + f_{n+3} e3, n >= 0.
Quaternion fib_quaternion(SeqIndex n, const AlgebraParams& params);

/// l_n + l_{n+1} e1 + l_{n+2} e2 + l_{n+3} e3, n >= 0.
Quaternion lucas_quaternion(SeqIndex n, const AlgebraParams& params);

enum class NormRelation {
    P35_1, ///< 5 n(F_n) = n(L_n)
    P35_3, ///< n(F_n + L_n) = n(F_n) + n(L_n) + 2 (f_{2n+7} - f_{2n-1})
};

/// Evaluates a norm relation between Fibonacci and Lucas quaternions in
/// H(-1, -1), where the norm is a sum of four squares.
CheckResult norm_relation_check(SeqIndex n, NormRelation which);

/// {alpha, beta, coeffs:[a1,a2,a3,a4]} with rationals as "p/q" strings.
nlohmann::json to_json(const Quaternion& x);

} // namespace fibalg
