#pragma once

#include <cstdint>
#include <utility>

#include "fibalg/numeric.hpp"

namespace fibalg {

/// Signed sequence index. Negative indices are first-class for fib/lucas.
using SeqIndex = std::int64_t;

/// Largest |n| accepted by the sequence evaluators.
inline constexpr SeqIndex kMaxSeqIndex = 1'000'000;

/// Throws InvalidInput when |n| exceeds kMaxSeqIndex.
void check_index(SeqIndex n);

/// (f_n, f_{n+1}) for 0 <= n <= kMaxSeqIndex, by fast doubling.
std::pair<Integer, Integer> fib_pair(SeqIndex n);

/// f_n for any signed n; f_{-n} = (-1)^{n+1} f_n.
Integer fib(SeqIndex n);

/// l_n for any signed n; l_{-n} = (-1)^n l_n.
Integer lucas(SeqIndex n);

/// Generalized Fibonacci-Lucas number g_n^{p,q} = p f_{n-1} + q l_n, n >= 0.
///
/// The closed form reproduces both seeds (g_0 = p + 2q, g_1 = q) and the
/// recurrence g_n = g_{n-1} + g_{n-2}.
Integer gen_fib_lucas(const Integer& p, const Integer& q, SeqIndex n);

} // namespace fibalg
