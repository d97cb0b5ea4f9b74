// Acceptance run: one PASS/FAIL line per numbered criterion.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fibalg/cli.hpp"
#include "fibalg/dtype.hpp"
#include "fibalg/genseq.hpp"
#include "fibalg/identities.hpp"
#include "fibalg/quaternion.hpp"
#include "fibalg/seqcore.hpp"
#include "fibalg/splitcert.hpp"

using namespace fibalg;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (ok)
            return;
        if (failures_.size() < 5)
            failures_.push_back(what);
        ++count_;
    }
    bool ok() const { return count_ == 0; }
    std::string summary() const {
        std::string s = std::to_string(count_) + " failure(s)";
        for (const auto& f : failures_)
            s += "; " + f;
        return s;
    }
    void note(std::string n) { notes_.push_back(std::move(n)); }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
    std::size_t count_ = 0;
};

Rational rand_rational(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> num(lo * den, hi * den);
    Rational r(num(rng), den);
    r.canonicalize();
    return r;
}

Rational rand_nonzero(std::mt19937_64& rng, long lo, long hi, long den) {
    Rational r;
    while (r == 0)
        r = rand_rational(rng, lo, hi, den);
    return r;
}

void values(Check& c) {
    const std::pair<int, const char*> table[] = {
        {10, "55"}, {15, "610"}, {20, "6765"}, {35, "9227465"}, {65, "17167680177565"}};
    for (auto [n, v] : table)
        c.require(fib(n) == Integer(v), "fib(" + std::to_string(n) + ") = " + to_string(fib(n)));
    const std::pair<int, int> f5[] = {{2, 11}, {3, 122}, {4, 1353}};
    for (auto [n, v] : f5)
        c.require(f5_factor(n) == v, "f5_factor(" + std::to_string(n) + ") = " + to_string(f5_factor(n)));
    c.require(fib(65) == 1860497 * fib(35) + 1845492 * fib(5), "f65 decomposition");
}

void identity_suite(Check& c) {
    std::size_t total = 0;
    for (IdentityId id : all_identities()) {
        if (id == IdentityId::P21_IX_AS_PRINTED)
            continue;
        const Report r = verify_range(id, identity_domain_min(id), 500);
        total += r.checked;
        c.require(r.passed(), std::string(identity_name(id)) + " fails");
        c.require(r.checked == static_cast<std::size_t>(501 - identity_domain_min(id)),
                  std::string(identity_name(id)) + " range incomplete");
    }
    const CheckResult printed = check_identity(IdentityId::P21_IX_AS_PRINTED, 1);
    // Printed clause at n = 1: l_2 l_4 against 5 f_2^2 + 1.
    const Integer lhs = lucas(2) * lucas(4);
    const Integer rhs = 5 * fib(2) * fib(2) + 1;
    c.require(!printed.holds, "printed clause holds at n=1");
    c.require(printed.lhs == lhs && printed.lhs == 21, "printed lhs " + to_string(printed.lhs));
    c.require(printed.rhs == rhs, "printed rhs " + to_string(printed.rhs));
    c.note(std::to_string(total) + " identity instances; printed clause ix at n=1: " + to_string(printed.lhs) +
           " != " + to_string(printed.rhs));
}

void ring_and_ideal(Check& c) {
    std::mt19937_64 rng(301);
    std::uniform_int_distribution<long> coeff(-100'000, 100'000);
    std::uniform_int_distribution<int> idx(0, 40);
    std::uniform_int_distribution<int> len(1, 5);
    for (int t = 0; t < 200; ++t) {
        const Integer x = coeff(rng) * fib(5 * idx(rng));
        const Integer y = coeff(rng) * fib(5 * idx(rng));
        c.require(in_ring_A(x + y) && in_ring_A(x * y), "A closure case " + std::to_string(t));
        c.require(x % 5 == 0 && y % 5 == 0, "A generator not in 5Z");
    }
    auto element = [&] {
        std::vector<MTerm> terms(len(rng));
        for (auto& term : terms)
            term = {coeff(rng), coeff(rng), idx(rng)};
        return m_element(terms);
    };
    for (int t = 0; t < 200; ++t) {
        const Integer v = element();
        const Integer w = element();
        const Integer z = coeff(rng);
        c.require(in_ideal_M(v) && v % 5 == 0, "M element outside 5Z");
        c.require(in_ideal_M(v + w) && in_ideal_M(z * v), "M closure case " + std::to_string(t));
    }
    const Integer printed = m_term_as_printed({1, 1, 1});
    c.require(printed == 58 && printed % 5 != 0 && !in_ideal_M(printed), "printed convention value");
    c.note("printed M convention at p=q=n=1 gives " + to_string(printed) + ", " + to_string(printed) +
           " mod 5 = " + to_string(Integer(printed % 5)));
}

void quaternions(Check& c) {
    std::mt19937_64 rng(401);
    auto params = [&] { return AlgebraParams(rand_nonzero(rng, -9, 9, 4), rand_nonzero(rng, -9, 9, 4)); };
    auto element = [&](const AlgebraParams& p) {
        return Quaternion(p, {rand_rational(rng, -20, 20, 6), rand_rational(rng, -20, 20, 6),
                              rand_rational(rng, -20, 20, 6), rand_rational(rng, -20, 20, 6)});
    };
    for (int t = 0; t < 1000; ++t) {
        const AlgebraParams p = params();
        const Quaternion x = element(p);
        const Quaternion y = element(p);
        c.require(quat_norm(quat_mul(x, y)) == quat_norm(x) * quat_norm(y), "norm multiplicativity");
    }
    for (int t = 0; t < 500; ++t) {
        const AlgebraParams p = params();
        const Quaternion x = element(p);
        const Quaternion y = element(p);
        c.require(quat_conj(quat_mul(x, y)) == quat_mul(quat_conj(y), quat_conj(x)), "conjugation");
    }
    for (int t = 0; t < 500; ++t) {
        const AlgebraParams p = params();
        const Quaternion x = element(p);
        const Quaternion y = element(p);
        const Quaternion z = element(p);
        c.require(quat_mul(quat_mul(x, y), z) == quat_mul(x, quat_mul(y, z)), "associativity");
    }
    for (int n = 0; n <= 200; ++n) {
        c.require(norm_relation_check(n, NormRelation::P35_1).holds, "clause 1 at n=" + std::to_string(n));
        c.require(norm_relation_check(n, NormRelation::P35_3).holds, "clause 3 at n=" + std::to_string(n));
    }
    const AlgebraParams h = AlgebraParams::hamilton();
    const Quaternion f1 = fib_quaternion(1, h);
    const Quaternion l1 = lucas_quaternion(1, h);
    const Rational lhs = quat_norm(f1 + l1);
    const Rational parts = quat_norm(f1) + quat_norm(l1);
    const Integer cross = 2 * (fib(9) - fib(1));
    c.require(lhs == 156 && parts == 90 && cross == 66 && lhs == parts + cross, "n=1 witness");
    c.note("n=1: " + to_string(lhs) + " = " + to_string(parts) + " + " + to_string(cross));
}

void certificates(Check& c) {
    int built = 0;
    int decided = 0;
    for (Family f : all_families()) {
        for (SeqIndex n = family_min_index(f); n <= 50; ++n) {
            const Certificate cert = certificate_family(f, n);
            const std::string tag = "family " + std::string(family_name(f)) + " n=" + std::to_string(n);
            c.require(verify_point(cert.conic, cert.point, false), tag + " non-strict");
            c.require(verify_point(cert.conic, cert.point, true), tag + " strict");
            ++built;
            if (n <= 20) {
                c.require(decide_split_hilbert(cert.conic) == SplitVerdict::Split, tag + " hilbert");
                ++decided;
            }
        }
    }
    c.require(decide_split_hilbert(ConicSpec(-1, -1)) == SplitVerdict::Division, "(-1,-1) not division");
    c.note(std::to_string(built) + " certificates verified, " + std::to_string(decided) + " hilbert decisions");
}

void sequences(Check& c) {
    std::mt19937_64 rng(601);
    int relations = 0;
    while (relations < 100) {
        const LinearRelation rel{rand_rational(rng, -4, 4, 6), rand_rational(rng, -4, 4, 6)};
        if (rel.discriminant() <= 0)
            continue;
        const Rational a = rand_rational(rng, -6, 6, 5);
        const Rational b = rand_rational(rng, -6, 6, 5);
        for (int n = 0; n <= 60; ++n) {
            const QuadExt closed = binet_general(rel, a, b, n);
            const QuadExt iter = QuadExt::rational(relation_seq(rel, a, b, Side::Left, n), closed.radicand());
            c.require(closed == iter, "binet mismatch at n=" + std::to_string(n));
        }
        ++relations;
    }
    int limits = 0;
    std::uniform_int_distribution<long> seed(-5, 5);
    while (limits < 50) {
        const Rational A = rand_rational(rng, 0, 3, 8);
        if (A < Rational(1, 2))
            continue;
        const LinearRelation rel{A, rand_rational(rng, -3, 3, 16)};
        if (rel.discriminant() <= 0)
            continue;
        const double sq = std::sqrt(rel.discriminant().get_d());
        const double alpha = (A.get_d() + sq) / 2;
        const double beta = (A.get_d() - sq) / 2;
        if (std::abs(alpha) <= std::abs(beta) + 0.1)
            continue;
        RatioLimit r{};
        try {
            r = ratio_limit(rel, Rational(seed(rng)), Rational(seed(rng)));
        } catch (const InvalidInput&) {
            continue;
        }
        c.require(std::abs(r.empirical - alpha) < 1e-9, "ratio off for A=" + to_string(rel.A) +
                                                             " B=" + to_string(rel.B));
        ++limits;
    }
    const RatioLimit golden = ratio_limit({1, 1}, 0, 1);
    const RatioLimit silver = ratio_limit({2, 1}, 0, 1);
    c.require(std::abs(golden.limit - 1.618033988749895) < 5e-13, "golden ratio");
    c.require(std::abs(golden.empirical - 1.618033988749895) < 5e-13, "golden ratio empirical");
    c.require(std::abs(silver.limit - 2.414213562373095) < 5e-13, "1+sqrt2");
    c.require(std::abs(silver.empirical - 2.414213562373095) < 5e-13, "1+sqrt2 empirical");
    std::ostringstream s;
    s.precision(13);
    s << std::fixed << "golden " << golden.limit << ", silver " << silver.limit;
    c.note(s.str());
}

template <typename G>
void closed_vs_iter(Check& c, const G& g, const typename G::Element& g0, const typename G::Element& g1,
                    const DTypeSpec& s) {
    for (int n = 0; n <= 40; ++n)
        c.require(g.equal(dtype_closed_form(g, g0, g1, s, n), dtype_seq(g, g0, g1, s, Side::Left, n)),
                  g.name() + " n=" + std::to_string(n));
}

DTypeSpec rand_spec(std::mt19937_64& rng, const std::vector<long>& as, const std::vector<long>& bs) {
    std::uniform_int_distribution<std::size_t> pa(0, as.size() - 1);
    std::uniform_int_distribution<std::size_t> pb(0, bs.size() - 1);
    std::uniform_int_distribution<long> seed(-4, 4);
    for (;;) {
        DTypeSpec s{as[pa(rng)], bs[pb(rng)], seed(rng), seed(rng)};
        if ((s.d1 - s.a * s.d0) % s.b == 0)
            return s;
    }
}

void dtype(Check& c) {
    std::mt19937_64 rng(701);
    std::uniform_int_distribution<long> small(-9, 9);
    std::uniform_int_distribution<long> modulus(2, 500);
    const IntegersAdditive z;
    const RationalsMultiplicative q;
    for (int t = 0; t < 50; ++t) {
        const DTypeSpec s = rand_spec(rng, {-3, -2, -1, 0, 1, 2, 3}, {-3, -2, -1, 1, 2, 3});
        closed_vs_iter(c, z, Integer(small(rng)), Integer(small(rng)), s);

        const UnitsMod u{Integer(modulus(rng))};
        Integer g0 = u.reduce(small(rng));
        Integer g1 = u.reduce(small(rng));
        while (!u.contains(g0))
            g0 = u.reduce(g0 + 1);
        while (!u.contains(g1))
            g1 = u.reduce(g1 + 1);
        closed_vs_iter(c, u, g0, g1, s);

        // Periodic exponent weights keep rational powers small.
        const std::pair<long, long> weights[] = {{-1, -1}, {0, -1}, {1, -1}, {0, 1}};
        const auto [wa, wb] = weights[t % 4];
        const DTypeSpec sq = rand_spec(rng, {wa}, {wb});
        Rational r0 = rand_nonzero(rng, -4, 4, 3);
        Rational r1 = rand_nonzero(rng, -4, 4, 5);
        closed_vs_iter(c, q, r0, r1, sq);
    }
    const UnitsMod u11(11);
    const Integer phi5 = dtype_seq(u11, 2, 3, DTypeSpec::fibonacci(), Side::Left, 5);
    c.require(phi5 == 8 && dtype_closed_form(u11, 2, 3, DTypeSpec::fibonacci(), 5) == 8, "units mod 11 phi_5");
    c.require(d_seq(DTypeSpec::lucas(), 5) == 11, "lucas d_5");
    c.require(d_seq(DTypeSpec::lucas(), -1) == -1, "lucas d_-1");
    c.note("units mod 11: phi_5 = " + to_string(phi5) + "; lucas d_5 = " + to_string(d_seq(DTypeSpec::lucas(), 5)) +
           ", d_-1 = " + to_string(d_seq(DTypeSpec::lucas(), -1)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void cli_contract(Check& c) {
    auto call = [](std::vector<std::string> args, std::string* out_text = nullptr) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        if (out_text != nullptr)
            *out_text = out.str();
        return code;
    };
    const std::string dir = FIBALG_GOLDEN_DIR;
    const std::pair<std::vector<std::string>, std::string> golden[] = {
        {{"seq", "fib", "10"}, "seq_fib_10.json"},
        {{"identity", "range", "P21_III", "0", "0"}, "identity_range_P21_III_0_0.json"},
        {{"cert", "family", "4", "2"}, "cert_family_4_2.json"},
    };
    for (const auto& [args, file] : golden) {
        std::string out;
        const int code = call(args, &out);
        const std::string want = read_file(dir + "/" + file);
        c.require(!want.empty(), "missing golden " + file);
        c.require(code == 0 && out == want, "golden " + file + " got " + out);
    }
    c.require(call({"identity", "check", "P21_IX_AS_PRINTED", "1"}) == 1, "failing identity exit");
    std::string out;
    const int code = call({"cert", "decide", "316837008400094222150776737920885469881809351973256961", "3",
                           "--budget", "1000"},
                          &out);
    c.require(code == 3 && out.find("undecided") != std::string::npos, "over-budget exit " + std::to_string(code));
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"reference values", values},
        {"identity suite", identity_suite},
        {"ring and ideal closure", ring_and_ideal},
        {"quaternion algebra", quaternions},
        {"split certificates", certificates},
        {"generalized sequences", sequences},
        {"d-type sequences", dtype},
        {"cli contract", cli_contract},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs << "s";
        std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << t.str() << ")";
        if (!check.ok())
            std::cout << " -- " << check.summary();
        std::cout << '\n';
        for (const auto& n : check.notes())
            std::cout << "    " << n << '\n';
        failed += check.ok() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
