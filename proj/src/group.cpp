#include "fibalg/group.hpp"

#include <algorithm>

#include "fibalg/error.hpp"

namespace fibalg {

Rational RationalsMultiplicative::inverse(const Element& x) const {
    if (x == 0)
        throw InvalidInput("0 is not a unit of Q");
    return 1 / x;
}

Rational RationalsMultiplicative::power(const Element& x, const Integer& k) const {
    if (x == 0)
        throw InvalidInput("0 is not a unit of Q");
    if (x == 1 || k == 0)
        return 1;
    if (x == -1)
        return mpz_odd_p(k.get_mpz_t()) != 0 ? -1 : 1;
    const Rational base = k < 0 ? inverse(x) : x;
    const Integer e = abs(k);
    const std::size_t bits =
        std::max(mpz_sizeinbase(base.get_num_mpz_t(), 2), mpz_sizeinbase(base.get_den_mpz_t(), 2));
    if (!e.fits_ulong_p() || e.get_ui() > kMaxBits / bits)
        throw InvalidInput("power " + to_string(k) + " of " + to_string(x) + " exceeds the size limit");
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e.get_ui());
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e.get_ui());
    out.canonicalize();
    return out;
}

UnitsMod::UnitsMod(Integer modulus) : m_(std::move(modulus)) {
    if (m_ < 2)
        throw InvalidInput("units-mod needs a modulus >= 2, got " + to_string(m_));
}

UnitsMod::Element UnitsMod::reduce(const Integer& x) const {
    Integer r = x % m_;
    if (r < 0)
        r += m_;
    return r;
}

UnitsMod::Element UnitsMod::inverse(const Element& x) const {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m_.get_mpz_t()) == 0)
        throw InvalidInput(to_string(x) + " is not a unit modulo " + to_string(m_));
    return inv;
}

UnitsMod::Element UnitsMod::power(const Element& x, const Integer& k) const {
    const Integer base = k < 0 ? inverse(x) : x;
    const Integer e = abs(k);
    Integer out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m_.get_mpz_t());
    return out;
}

bool UnitsMod::contains(const Element& x) const {
    if (x < 0 || x >= m_)
        return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), m_.get_mpz_t());
    return g == 1;
}

} // namespace fibalg
