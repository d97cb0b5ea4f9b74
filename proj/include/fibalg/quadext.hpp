#pragma once

#include <string>

#include "fibalg/numeric.hpp"

namespace fibalg {

/// u + v sqrt(d) in Q(sqrt(d)), d a positive square-free integer.
///
/// A positive rational Delta is carried as r^2 d with d square-free, so
/// sqrt(Delta) = r sqrt(d) and every element has exactly one (u, v). When
/// Delta is a rational square, d = 1 and v is always folded into u.
class QuadExt {
public:
    /// u + v sqrt(radicand). The radicand must be positive and square-free.
    QuadExt(Rational u, Rational v, Integer radicand);

    /// The rational u embedded in Q(sqrt(radicand)).
    static QuadExt rational(Rational u, Integer radicand);

    /// sqrt(delta) for delta > 0, in its normalized field. Throws
    /// InvalidInput otherwise.
    static QuadExt sqrt(const Rational& delta);

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return v_ == 0; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }

    /// u^2 - d v^2.
    Rational field_norm() const;
    QuadExt conjugate() const;
    double to_double() const;

    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    QuadExt operator-() const;

    /// x^e for e >= 0 by repeated squaring.
    QuadExt pow(std::uint64_t e) const;

    friend bool operator==(const QuadExt&, const QuadExt&) = default;

private:
    void require_same_field(const QuadExt& other) const;
    void normalize();

    Rational u_;
    Rational v_;
    Integer d_;
};

/// "u + v*sqrt(d)" with canonical rationals.
std::string to_string(const QuadExt& x);

} // namespace fibalg
