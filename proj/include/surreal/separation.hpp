#pragma once

// Bounding and separating constructions for sets of surreals.

#include "surreal/error.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/sets.hpp"
#include "surreal/sign_seq.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace surreal {

// S < z, decided through sup* alone: s <= z restricted to l(s).
inline bool is_strict_upper_bound(const SurrealSet& s, const SignSeq& z) {
    const auto bound = sup_star(s);
    return compare(bound, restrict(z, bound.length())) <= 0;
}

// S <= z: a strict upper bound or the maximum of S.
inline bool is_weak_upper_bound(const SurrealSet& s, const SignSeq& z) {
    if (is_strict_upper_bound(s, z))
        return true;
    const auto m = set_max(s);
    const auto* top = std::get_if<SignSeq>(&m);
    return top && *top == z;
}

inline bool separates(const SignSeq& w, const SurrealSet& s, const SurrealSet& t) {
    return all_less_than(s, w) && all_greater_than(t, w);
}

namespace detail {

// Looks for a concrete pair u >= v among early members of the two sets.
inline std::optional<std::pair<SignSeq, SignSeq>> find_disorder(const SurrealSet& s,
                                                                const SurrealSet& t) {
    constexpr std::size_t depth = 16;
    const auto left = sample_elements(s, depth);
    const auto right = sample_elements(t, depth);
    for (const auto& u : left)
        for (const auto& v : right)
            if (compare(u, v) >= 0)
                return std::pair{u, v};
    return std::nullopt;
}

inline void require_ordered(const SurrealSet& s, const SurrealSet& t) {
    if (set_less(s, t))
        return;
    std::string msg = "left set is not below right set";
    if (auto w = find_disorder(s, t))
        msg += ": '" + to_string(w->first) + "' >= '" + to_string(w->second) + "'";
    throw not_separated_error(msg);
}

} // namespace detail

// sup* S padded with minuses past every member of T.
inline SignSeq prolonged_separator(const SurrealSet& s, const SurrealSet& t) {
    detail::require_ordered(s, t);
    const auto bound = sup_star(s);
    const Ordinal eta = std::max(bound.length(), length_bound(t));
    return prolong(bound, Sign::minus, eta);
}

enum class EndpointChoice { sup_side, inf_side, both };

struct EndpointSeparator {
    EndpointChoice choice;
    SignSeq value;
};

// The longer of sup* S and inf* T; on equal lengths both separate and the
// sup side is reported.
inline EndpointSeparator endpoint_separator(const SurrealSet& s, const SurrealSet& t) {
    detail::require_ordered(s, t);
    auto lo = sup_star(s);
    auto hi = inf_star(t);
    const auto c = lo.length() <=> hi.length();
    if (c == 0)
        return {EndpointChoice::both, std::move(lo)};
    if (c > 0)
        return {EndpointChoice::sup_side, std::move(lo)};
    return {EndpointChoice::inf_side, std::move(hi)};
}

// Shortest w with S < w < T. Both bounds are padded to a common length
// eps + 1 (minuses below, pluses above) and cut at their first difference.
inline SignSeq shortest_separator(const SurrealSet& s, const SurrealSet& t) {
    detail::require_ordered(s, t);
    const auto lo = sup_star(s);
    const auto hi = inf_star(t);
    const Ordinal padded = std::max(lo.length(), hi.length()) + Ordinal{1};
    const auto lo_hat = prolong(lo, Sign::minus, padded);
    const auto hi_hat = prolong(hi, Sign::plus, padded);
    // The padded ends differ in their last sign.
    return restrict(lo_hat, *first_difference(lo_hat, hi_hat));
}

namespace detail {

// Position of the first x at or after `from` in s.
inline std::optional<Ordinal> first_sign_from(const SignSeq& s, Sign x, const Ordinal& from) {
    Ordinal start;
    for (const auto& r : s.runs()) {
        const Ordinal end = start + r.count;
        if (r.sign == x && end > from)
            return std::max(start, from);
        start = end;
    }
    return std::nullopt;
}

} // namespace detail

// The ordered separator of two surreals:
//   (a) s == t gives s;
//   (b) a first difference where both are defined gives the common prefix;
//   (c) t properly prolongs s: t cut at its first + from l(s) on, else t;
//   (d) s properly prolongs t: s cut at its first - from l(t) on, else s.
inline SignSeq sep(const SignSeq& s, const SignSeq& t) {
    const auto d = detail::diverge(s, t);
    if (!d)
        return s;
    if (d->left != SignQuery::undefined && d->right != SignQuery::undefined)
        return restrict(s, d->position);
    if (d->left == SignQuery::undefined) {
        if (auto cut = detail::first_sign_from(t, Sign::plus, s.length()))
            return restrict(t, *cut);
        return t;
    }
    if (auto cut = detail::first_sign_from(s, Sign::minus, t.length()))
        return restrict(s, *cut);
    return s;
}

inline SignSeq shortest_separator_via_sep(const SurrealSet& s, const SurrealSet& t) {
    detail::require_ordered(s, t);
    return sep(sup_star(s), inf_star(t));
}

} // namespace surreal
