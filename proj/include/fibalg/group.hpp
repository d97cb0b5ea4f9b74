#pragma once

#include <concepts>
#include <string>

#include "fibalg/numeric.hpp"

namespace fibalg {

/// What the d-type sequence machinery needs from a group: identity,
/// operation, inverse, equality, signed integer powers, a membership test
/// for supplied elements, and a canonical text form.
template <typename G>
concept GroupOracle = requires(const G& g, const typename G::Element& x, const typename G::Element& y,
                               const Integer& k) {
    typename G::Element;
    { g.identity() } -> std::convertible_to<typename G::Element>;
    { g.op(x, y) } -> std::convertible_to<typename G::Element>;
    { g.inverse(x) } -> std::convertible_to<typename G::Element>;
    { g.equal(x, y) } -> std::convertible_to<bool>;
    { g.power(x, k) } -> std::convertible_to<typename G::Element>;
    { g.contains(x) } -> std::convertible_to<bool>;
    { g.format(x) } -> std::convertible_to<std::string>;
};

/// x^k by square-and-multiply using only op and inverse. Groups may offer
/// a faster power(); this one serves as a reference.
template <GroupOracle G>
typename G::Element power_by_squaring(const G& group, typename G::Element x, Integer k) {
    if (k < 0) {
        x = group.inverse(x);
        k = -k;
    }
    typename G::Element result = group.identity();
    const auto bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (auto i = bits; i-- > 0;) {
        result = group.op(result, result);
        if (mpz_tstbit(k.get_mpz_t(), i) != 0)
            result = group.op(result, x);
    }
    return result;
}

/// (Z, +).
class IntegersAdditive {
public:
    using Element = Integer;

    Element identity() const { return 0; }
    Element op(const Element& x, const Element& y) const { return x + y; }
    Element inverse(const Element& x) const { return -x; }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    Element power(const Element& x, const Integer& k) const { return k * x; }
    bool contains(const Element&) const { return true; }
    std::string format(const Element& x) const { return to_string(x); }
    std::string name() const { return "integers-additive"; }
};

/// (Q^*, *). Powers grow quickly; results above kMaxBits bits are refused
/// with InvalidInput instead of exhausting memory.
class RationalsMultiplicative {
public:
    using Element = Rational;
    static constexpr std::size_t kMaxBits = std::size_t{1} << 26;

    Element identity() const { return 1; }
    Element op(const Element& x, const Element& y) const { return x * y; }
    Element inverse(const Element& x) const;
    bool equal(const Element& x, const Element& y) const { return x == y; }
    Element power(const Element& x, const Integer& k) const;
    bool contains(const Element& x) const { return x != 0; }
    std::string format(const Element& x) const { return to_string(x); }
    std::string name() const { return "rationals-multiplicative"; }
};

/// (Z/mZ)^*, elements stored as residues in [0, m).
class UnitsMod {
public:
    using Element = Integer;

    /// Throws InvalidInput unless m >= 2.
    explicit UnitsMod(Integer modulus);

    const Integer& modulus() const { return m_; }

    Element identity() const { return 1; }
    Element op(const Element& x, const Element& y) const { return (x * y) % m_; }
    Element inverse(const Element& x) const;
    bool equal(const Element& x, const Element& y) const { return x == y; }
    Element power(const Element& x, const Integer& k) const;
    bool contains(const Element& x) const;
    std::string format(const Element& x) const { return to_string(x); }
    std::string name() const { return "units-mod:" + to_string(m_); }

    /// Reduces an arbitrary integer into [0, m).
    Element reduce(const Integer& x) const;

private:
    Integer m_;
};

static_assert(GroupOracle<IntegersAdditive>);
static_assert(GroupOracle<RationalsMultiplicative>);
static_assert(GroupOracle<UnitsMod>);

} // namespace fibalg
