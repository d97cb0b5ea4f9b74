// Local Hilbert symbols over Q and the splitting test built on them.
//
// Writing a = p^s u and b = p^t v with u, v p-adic units:
//   odd p : (a,b)_p = (-1)^{s t (p-1)/2} (u/p)^t (v/p)^s
//   p = 2 : (a,b)_2 = (-1)^{e(u) e(v) + s w(v) + t w(u)},
//           e(u) = (u-1)/2 mod 2, w(u) = (u^2-1)/8 mod 2
//   real  : -1 iff a < 0 and b < 0.
// H(a,b) splits iff every local symbol is +1.

#include <set>
#include <string>

#include "fibalg/error.hpp"
#include "fibalg/splitcert.hpp"

namespace fibalg {

namespace {

struct LocalPart {
    long valuation; // v_p(x)
    Integer unit;   // x / p^v reduced modulo `modulus`
};

LocalPart split_off(const Rational& x, const Integer& p, const Integer& modulus) {
    Integer num = x.get_num();
    Integer den = x.get_den();
    const long up = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    const long down = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    Integer unit = (num * inv) % modulus;
    if (unit < 0)
        unit += modulus;
    return {up - down, unit};
}

int legendre(const Integer& u, const Integer& p) {
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
}

long odd_mod2(long v) {
    return v & 1L;
}

void add_primes(const Integer& v, FactorBudget& budget, std::set<Integer>& primes) {
    if (v == 0)
        return;
    for (const auto& [p, e] : factorize(v, budget))
        primes.insert(p);
}

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& prime) {
    if (a == 0 || b == 0)
        throw InvalidInput("Hilbert symbol needs nonzero arguments");
    if (prime == 0)
        return (a < 0 && b < 0) ? -1 : 1;
    if (prime < 2)
        throw InvalidInput("Hilbert symbol place must be a prime or 0");

    if (prime == 2) {
        const Integer eight(8);
        const LocalPart pa = split_off(a, prime, eight);
        const LocalPart pb = split_off(b, prime, eight);
        const long ua = pa.unit.get_si();
        const long vb = pb.unit.get_si();
        const long e_u = ((ua - 1) / 2) & 1L;
        const long e_v = ((vb - 1) / 2) & 1L;
        const long w_u = ((ua * ua - 1) / 8) & 1L;
        const long w_v = ((vb * vb - 1) / 8) & 1L;
        const long exponent = e_u * e_v + odd_mod2(pa.valuation) * w_v + odd_mod2(pb.valuation) * w_u;
        return (exponent & 1L) ? -1 : 1;
    }

    const LocalPart pa = split_off(a, prime, prime);
    const LocalPart pb = split_off(b, prime, prime);
    const long s = odd_mod2(pa.valuation);
    const long t = odd_mod2(pb.valuation);
    int result = 1;
    if (s && t && mpz_fdiv_ui(prime.get_mpz_t(), 4) == 3)
        result = -result;
    if (t)
        result *= legendre(pa.unit, prime);
    if (s)
        result *= legendre(pb.unit, prime);
    return result;
}

std::string_view verdict_name(SplitVerdict v) {
    return v == SplitVerdict::Split ? "split" : "division";
}

SplitVerdict decide_split_hilbert(const ConicSpec& spec, FactorBudget& budget) {
    std::set<Integer> places{Integer(2)};
    add_primes(spec.a().get_num(), budget, places);
    add_primes(spec.a().get_den(), budget, places);
    add_primes(spec.b().get_num(), budget, places);
    add_primes(spec.b().get_den(), budget, places);

    if (hilbert_symbol(spec.a(), spec.b(), Integer(0)) < 0)
        return SplitVerdict::Division;
    for (const auto& p : places)
        if (hilbert_symbol(spec.a(), spec.b(), p) < 0)
            return SplitVerdict::Division;
    return SplitVerdict::Split;
}

SplitVerdict decide_split_hilbert(const ConicSpec& spec) {
    FactorBudget budget;
    return decide_split_hilbert(spec, budget);
}

} // namespace fibalg
