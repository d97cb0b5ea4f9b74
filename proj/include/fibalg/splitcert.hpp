#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fibalg/factor.hpp"
#include "fibalg/numeric.hpp"
#include "fibalg/seqcore.hpp"

namespace fibalg {

/// The conic a x^2 + b y^2 = z^2 attached to H(a, b).
class ConicSpec {
public:
    /// Throws InvalidInput unless a and b are both nonzero.
    ConicSpec(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    friend bool operator==(const ConicSpec&, const ConicSpec&) = default;

private:
    Rational a_;
    Rational b_;
};

/// A projective point (x : y : z) with rational coordinates, not all zero.
struct RationalPoint {
    Rational x;
    Rational y;
    Rational z;

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// The Fibonacci/Lucas families of split quaternion algebras over Q.
/// Family 8 carries two algebras, 8a and 8b.
enum class Family { F1, F2, F3, F4, F5, F6, F7, F8a, F8b, F9 };

const std::vector<Family>& all_families();
std::string_view family_name(Family f);
/// Accepts "1".."9", "8a", "8b".
std::optional<Family> parse_family(std::string_view text);

/// Smallest n for which the family's parameters are nonzero and its point
/// has no zero coordinate.
SeqIndex family_min_index(Family f);

struct Certificate {
    Family family;
    SeqIndex n;
    ConicSpec conic;
    RationalPoint point;
};

/// Builds the family's conic at index n together with its rational point.
/// Throws InvalidInput below family_min_index(f), naming the parameter or
/// coordinate that degenerates.
Certificate certificate_family(Family f, SeqIndex n);

/// a x0^2 + b y0^2 == z0^2 exactly, and the point is nonzero. In strict
/// mode every coordinate must additionally be nonzero.
bool verify_point(const ConicSpec& spec, const RationalPoint& pt, bool strict);

inline constexpr std::int64_t kMaxSearchHeight = 10'000;

/// Clears denominators and scans integer points with 0 <= x, y, z <= height
/// in lexicographic order, returning the first nonzero solution. Absence of
/// a point proves nothing. Throws InvalidInput if height is outside
/// [1, kMaxSearchHeight].
std::optional<RationalPoint> search_point(const ConicSpec& spec, std::int64_t height);

/// Place of Q: a prime p, or the real place when `prime` is 0.
/// Returns the Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& prime);

enum class SplitVerdict { Split, Division };

std::string_view verdict_name(SplitVerdict v);

/// Decides whether H(a, b) splits from local Hilbert symbols at the real
/// place, at 2 and at every odd prime dividing a numerator or denominator.
/// Independent of any certificate. Throws Undecided if factoring the
/// parameters exceeds the budget.
SplitVerdict decide_split_hilbert(const ConicSpec& spec, FactorBudget& budget);
SplitVerdict decide_split_hilbert(const ConicSpec& spec);

/// {family, n, a, b, point:[x,y,z], verified, strict}.
nlohmann::json to_json(const Certificate& cert, bool verified, bool strict);

} // namespace fibalg
