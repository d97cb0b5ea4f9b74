#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fibalg/numeric.hpp"
#include "fibalg/seqcore.hpp"

namespace fibalg {

/// The registered scalar Fibonacci/Lucas identities.
///
/// P21_I .. P21_XIV are the fourteen classical clauses (IX with the
/// index f_{2n+1}); P35_2 is the scalar sum relation between f and l.
/// P21_IX_AS_PRINTED keeps the variant with f_{n+1}, which is false for
/// every n >= 1 and exists only as a diagnostic.
enum class IdentityId {
    P21_I,
    P21_II,
    P21_III,
    P21_IV,
    P21_V,
    P21_VI,
    P21_VII,
    P21_VIII,
    P21_IX,
    P21_X,
    P21_XI,
    P21_XII,
    P21_XIII,
    P21_XIV,
    P35_2,
    P21_IX_AS_PRINTED,
};

/// Every identity id, registered ones first and diagnostics last.
const std::vector<IdentityId>& all_identities();

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Human-readable statement of the identity, e.g. "f_{2n} = l_n f_n".
std::string_view identity_statement(IdentityId id);

/// Smallest n at which the identity is defined.
SeqIndex identity_domain_min(IdentityId id);

/// Outcome of evaluating one identity at one index.
///
/// For equational identities lhs and rhs are the two evaluated sides. For
/// P21_I (5 | f_n <=> 5 | n) they are f_n mod 5 and n mod 5.
struct CheckResult {
    bool holds = false;
    Integer lhs;
    Integer rhs;
    SeqIndex n = 0;
};

CheckResult check_identity(IdentityId id, SeqIndex n);

struct Failure {
    SeqIndex n;
    Integer lhs;
    Integer rhs;
};

struct Report {
    IdentityId identity;
    SeqIndex n_lo;
    SeqIndex n_hi;
    std::size_t checked = 0;
    std::vector<Failure> failures;
    double millis = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Checks the identity for every n in [n_lo, n_hi]. Failures come out
/// ordered by n.
Report verify_range(IdentityId id, SeqIndex n_lo, SeqIndex n_hi);

/// {identity, range:[lo,hi], checked, failures:[{n,lhs,rhs}], millis}.
/// Integers are decimal strings. Pass include_timing = false for output
/// that must be reproducible byte for byte.
nlohmann::json to_json(const Report& report, bool include_timing = true);

// ---------------------------------------------------------------------------
// Multiples of f_5 among Fibonacci numbers.

/// k with f_{5n} = k f_5.
Integer f5_factor(SeqIndex n);

/// Membership in A = { a f_{5n} : a in Z, n >= 0 }, which equals 5Z.
bool in_ring_A(const Integer& x);

/// One summand of an element of M: p f_{5n} + 5 q l_{5n+1}.
struct MTerm {
    Integer p;
    Integer q;
    SeqIndex n = 0;
};

/// Sum of the generalized Fibonacci-Lucas terms whose f-index is 5n_i.
/// Always a multiple of 5. Throws InvalidInput on an empty list.
Integer m_element(const std::vector<MTerm>& terms);

/// The literal reading g_{5n}^{p,5q} = p f_{5n-1} + 5 q l_{5n}, which is
/// not always divisible by 5 (p = q = n = 1 gives 58).
Integer m_term_as_printed(const MTerm& term);

/// Membership in M, which equals 5Z.
bool in_ideal_M(const Integer& x);

} // namespace fibalg
