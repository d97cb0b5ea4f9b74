#pragma once

#include <cstdint>
#include <vector>

#include "fibalg/numeric.hpp"
#include "fibalg/quadext.hpp"
#include "fibalg/seqcore.hpp"

namespace fibalg {

/// The binary operation x * y = A x + B y on Q.
struct LinearRelation {
    Rational A;
    Rational B;

    /// A^2 + 4B, the discriminant of t^2 - A t - B.
    Rational discriminant() const { return A * A + 4 * B; }
};

enum class Side {
    Left,  ///< phi_n = phi_{n-1} * phi_{n-2}
    Right, ///< phi_n = phi_{n-2} * phi_{n-1}
};

inline constexpr std::int64_t kMaxRelationIndex = 100'000;
inline constexpr std::int64_t kMaxBinetIndex = 10'000;

/// phi_n of the Fibonacci-type sequence with phi_0 = a0, phi_1 = b1,
/// iterated exactly.
Rational relation_seq(const LinearRelation& rel, const Rational& a0, const Rational& b1, Side side,
                      std::int64_t n);

/// The characteristic roots alpha = (A + sqrt D)/2 and beta = (A - sqrt D)/2.
struct CharacteristicRoots {
    QuadExt alpha;
    QuadExt beta;
};

/// Throws InvalidInput unless the discriminant is positive.
CharacteristicRoots characteristic_roots(const LinearRelation& rel);

/// Closed form of the left sequence,
///   phi_n = [(-b + a beta) alpha^n + (b - a alpha) beta^n] / (beta - alpha),
/// evaluated exactly in Q(sqrt D). The result is rational whenever the
/// formula is right.
QuadExt binet_general(const LinearRelation& rel, const Rational& a0, const Rational& b1, std::int64_t n);

struct RatioLimit {
    double limit;           ///< the dominant root alpha
    double empirical;       ///< phi_201 / phi_200
    double empirical_error; ///< |empirical - limit|
};

/// lim phi_{n+1}/phi_n for the left sequence. Requires D > 0, |alpha| >
/// |beta| (equivalently A > 0) and a nonzero alpha-coefficient -b + a beta;
/// each failure raises InvalidInput naming the degeneracy.
RatioLimit ratio_limit(const LinearRelation& rel, const Rational& a0, const Rational& b1);

/// d_n = a d_{n-1} + b d_{n-2}, d_0 = d0, d_1 = d1.
struct DTypeSpec {
    Integer a;
    Integer b;
    Integer d0;
    Integer d1;

    static DTypeSpec fibonacci() { return {1, 1, 0, 1}; }
    static DTypeSpec lucas() { return {1, 1, 2, 1}; }
};

/// d_{-1} = (d1 - a d0) / b, the one-step backward extension. Throws
/// InvalidInput if b = 0 or the quotient is not an integer.
Integer d_minus_one(const DTypeSpec& spec);

/// d_n for -1 <= n <= kMaxSeqIndex.
Integer d_seq(const DTypeSpec& spec, SeqIndex n);

/// d_{-1}, d_0, ..., d_n.
std::vector<Integer> d_trail(const DTypeSpec& spec, SeqIndex n);

} // namespace fibalg
