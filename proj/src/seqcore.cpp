#include "fibalg/seqcore.hpp"

#include <bit>
#include <string>

#include "fibalg/error.hpp"

namespace fibalg {

void check_index(SeqIndex n) {
    if (n > kMaxSeqIndex || n < -kMaxSeqIndex)
        throw InvalidInput("index " + std::to_string(n) + " outside [-" +
                           std::to_string(kMaxSeqIndex) + ", " + std::to_string(kMaxSeqIndex) + "]");
}

std::pair<Integer, Integer> fib_pair(SeqIndex n) {
    if (n < 0)
        throw InvalidInput("fib_pair: negative index " + std::to_string(n));
    check_index(n);

    // Walk the bits of n from the top, keeping (a, b) = (f_k, f_{k+1}):
    //   f_{2k}   = f_k (2 f_{k+1} - f_k)
    //   f_{2k+1} = f_k^2 + f_{k+1}^2
    Integer a = 0;
    Integer b = 1;
    Integer t;
    const auto bits = static_cast<std::uint64_t>(n);
    for (int i = std::bit_width(bits) - 1; i >= 0; --i) {
        t = 2 * b - a;
        t *= a;
        b = a * a + b * b;
        a = t;
        if ((bits >> i) & 1U) {
            a += b;
            std::swap(a, b);
        }
    }
    return {a, b};
}

Integer fib(SeqIndex n) {
    check_index(n);
    if (n >= 0)
        return fib_pair(n).first;
    Integer value = fib_pair(-n).first;
    if (neg_one_pow(-n + 1) < 0)
        value = -value;
    return value;
}

Integer lucas(SeqIndex n) {
    check_index(n);
    const SeqIndex m = n < 0 ? -n : n;
    auto [f, g] = fib_pair(m);
    Integer value = 2 * g - f;
    if (n < 0 && neg_one_pow(m) < 0)
        value = -value;
    return value;
}

Integer gen_fib_lucas(const Integer& p, const Integer& q, SeqIndex n) {
    if (n < 0)
        throw InvalidInput("gen_fib_lucas: negative index " + std::to_string(n));
    check_index(n);
    return p * fib(n - 1) + q * lucas(n);
}

} // namespace fibalg
