#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibalg/error.hpp"
#include "fibalg/genseq.hpp"
#include "fibalg/group.hpp"

namespace fibalg {

inline constexpr std::int64_t kMaxDTypeIndex = 1'000;

namespace detail {

template <GroupOracle G>
void require_member(const G& group, const typename G::Element& g, const char* which) {
    if (!group.contains(g))
        throw InvalidInput(std::string(which) + " = " + group.format(g) + " is not an element of " +
                           group.name());
    // Spot-check the group laws on the supplied element.
    const auto e = group.identity();
    if (!group.equal(group.op(g, e), g) || !group.equal(group.op(e, g), g) ||
        !group.equal(group.op(g, group.inverse(g)), e))
        throw InvalidInput("group-law violation on " + std::string(which) + " = " + group.format(g));
}

inline void require_dtype_index(std::int64_t n) {
    if (n < 0 || n > kMaxDTypeIndex)
        throw InvalidInput("d-type index " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxDTypeIndex) + "]");
}

} // namespace detail

/// Iterates the d-type recurrence in the group literally.
///
///   Left : phi_n = phi_{n-1}^a * phi_{n-2}^b,
///          phi_0 = g1^{d0} * g0^{d_{-1}},  phi_1 = g1^{d1} * g0^{d0}
///   Right: phi_n = phi_{n-2}^b * phi_{n-1}^a,
///          phi_0 = g0^{d_{-1}} * g1^{d0},  phi_1 = g0^{d0} * g1^{d1}
///
/// Requires an integral d_{-1} and 0 <= n <= kMaxDTypeIndex.
template <GroupOracle G>
typename G::Element dtype_seq(const G& group, const typename G::Element& g0, const typename G::Element& g1,
                              const DTypeSpec& spec, Side side, std::int64_t n) {
    detail::require_dtype_index(n);
    detail::require_member(group, g0, "g0");
    detail::require_member(group, g1, "g1");
    const Integer d_prev = d_minus_one(spec);

    auto mul = [&](const auto& x, const auto& y) { return group.op(x, y); };
    using Element = typename G::Element;
    Element older;
    Element newer;
    if (side == Side::Left) {
        older = mul(group.power(g1, spec.d0), group.power(g0, d_prev));
        newer = mul(group.power(g1, spec.d1), group.power(g0, spec.d0));
    } else {
        older = mul(group.power(g0, d_prev), group.power(g1, spec.d0));
        newer = mul(group.power(g0, spec.d0), group.power(g1, spec.d1));
    }
    if (n == 0)
        return older;
    for (std::int64_t k = 2; k <= n; ++k) {
        Element next = side == Side::Left ? mul(group.power(newer, spec.a), group.power(older, spec.b))
                                          : mul(group.power(older, spec.b), group.power(newer, spec.a));
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

/// phi_n = g1^{d_n} * g0^{d_{n-1}}, valid when g0 and g1 commute. Throws
/// InvalidInput for non-commuting generators.
template <GroupOracle G>
typename G::Element dtype_closed_form(const G& group, const typename G::Element& g0,
                                      const typename G::Element& g1, const DTypeSpec& spec, std::int64_t n) {
    detail::require_dtype_index(n);
    detail::require_member(group, g0, "g0");
    detail::require_member(group, g1, "g1");
    if (!group.equal(group.op(g1, g0), group.op(g0, g1)))
        throw InvalidInput("generators g0 = " + group.format(g0) + " and g1 = " + group.format(g1) +
                           " do not commute");
    const std::vector<Integer> d = d_trail(spec, n);
    // d holds d_{-1} .. d_n, so d_n is d.back() and d_{n-1} the one before.
    return group.op(group.power(g1, d[d.size() - 1]), group.power(g0, d[d.size() - 2]));
}

} // namespace fibalg
