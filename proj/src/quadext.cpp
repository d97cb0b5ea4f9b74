#include "fibalg/quadext.hpp"

#include <cmath>

#include "fibalg/error.hpp"
#include "fibalg/factor.hpp"

namespace fibalg {

QuadExt::QuadExt(Rational u, Rational v, Integer radicand)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(radicand)) {
    if (d_ <= 0)
        throw InvalidInput("radicand must be positive");
    normalize();
}

QuadExt QuadExt::rational(Rational u, Integer radicand) {
    return QuadExt(std::move(u), Rational(0), std::move(radicand));
}

QuadExt QuadExt::sqrt(const Rational& delta) {
    if (delta <= 0)
        throw InvalidInput("sqrt needs a positive rational, got " + to_string(delta));
    // delta = num/den = num*den / den^2; split num*den into r^2 * d.
    const Integer m = delta.get_num() * delta.get_den();
    Integer square_part = 1;
    Integer d = 1;
    for (const auto& [p, e] : factorize(m)) {
        for (unsigned i = 0; i < e / 2; ++i)
            square_part *= p;
        if (e % 2 == 1)
            d *= p;
    }
    Rational r(square_part, delta.get_den());
    r.canonicalize();
    return QuadExt(Rational(0), r, d);
}

void QuadExt::normalize() {
    u_.canonicalize();
    v_.canonicalize();
    if (d_ == 1 && v_ != 0) {
        u_ += v_;
        v_ = 0;
    }
}

void QuadExt::require_same_field(const QuadExt& other) const {
    if (d_ != other.d_)
        throw InvalidInput("elements of Q(sqrt(" + to_string(d_) + ")) and Q(sqrt(" + to_string(other.d_) +
                           ")) cannot be combined");
}

Rational QuadExt::field_norm() const {
    return u_ * u_ - d_ * v_ * v_;
}

QuadExt QuadExt::conjugate() const {
    return QuadExt(u_, -v_, d_);
}

double QuadExt::to_double() const {
    return u_.get_d() + v_.get_d() * std::sqrt(d_.get_d());
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    require_same_field(rhs);
    u_ += rhs.u_;
    v_ += rhs.v_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    require_same_field(rhs);
    u_ -= rhs.u_;
    v_ -= rhs.v_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    require_same_field(rhs);
    Rational u = u_ * rhs.u_ + d_ * v_ * rhs.v_;
    Rational v = u_ * rhs.v_ + v_ * rhs.u_;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
    require_same_field(rhs);
    // Non-square d makes the field norm vanish only at zero.
    const Rational n = rhs.field_norm();
    if (n == 0)
        throw InvalidInput("division by zero in Q(sqrt(" + to_string(d_) + "))");
    *this *= rhs.conjugate();
    u_ /= n;
    v_ /= n;
    return *this;
}

QuadExt QuadExt::operator-() const {
    return QuadExt(-u_, -v_, d_);
}

QuadExt QuadExt::pow(std::uint64_t e) const {
    QuadExt result = rational(Rational(1), d_);
    QuadExt base = *this;
    for (; e != 0; e >>= 1) {
        if (e & 1U)
            result *= base;
        if (e > 1)
            base *= base;
    }
    return result;
}

std::string to_string(const QuadExt& x) {
    return to_string(x.u()) + " + " + to_string(x.v()) + "*sqrt(" + to_string(x.radicand()) + ")";
}

} // namespace fibalg
