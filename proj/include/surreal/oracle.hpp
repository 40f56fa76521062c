#pragma once

// Naive reference implementations used as ground truth in tests and by the
// `oracle` CLI command.
//
// Everything here works position by position on finite sign lists and is
// written directly from the textbook definitions. None of it calls into the
// run-encoded comparison, restriction or set machinery; only the Sign type
// and ordinal arithmetic are shared.

#include "surreal/error.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/sets.hpp"
#include "surreal/sign_seq.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace surreal::oracle {

using FlatSeq = std::vector<Sign>;

// All sign lists of length <= max_len, by length, then lexicographically
// with - before +.
inline std::vector<FlatSeq> enumerate_surreals(std::size_t max_len) {
    std::vector<FlatSeq> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        const std::size_t count = std::size_t{1} << len;
        for (std::size_t mask = 0; mask < count; ++mask) {
            FlatSeq s(len);
            for (std::size_t k = 0; k < len; ++k)
                s[k] = (mask >> (len - 1 - k)) & 1U ? Sign::plus : Sign::minus;
            out.push_back(std::move(s));
        }
    }
    return out;
}

// The three-case definition, read literally.
inline std::strong_ordering naive_compare(const FlatSeq& s, const FlatSeq& t) {
    const std::size_t common = s.size() < t.size() ? s.size() : t.size();
    for (std::size_t g = 0; g < common; ++g) {
        if (s[g] != t[g])
            return s[g] == Sign::minus ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (s.size() == t.size())
        return std::strong_ordering::equal;
    if (s.size() < t.size())
        return t[s.size()] == Sign::plus ? std::strong_ordering::less : std::strong_ordering::greater;
    return s[t.size()] == Sign::minus ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline bool naive_less(const FlatSeq& s, const FlatSeq& t) { return naive_compare(s, t) < 0; }

// Finite sets always have a maximum: max with + appended, or empty.
inline FlatSeq naive_sup_star(const std::vector<FlatSeq>& s) {
    if (s.empty())
        return {};
    const FlatSeq* best = &s.front();
    for (const auto& u : s)
        if (naive_less(*best, u))
            best = &u;
    FlatSeq out = *best;
    out.push_back(Sign::plus);
    return out;
}

inline FlatSeq naive_inf_star(const std::vector<FlatSeq>& t) {
    if (t.empty())
        return {};
    const FlatSeq* best = &t.front();
    for (const auto& v : t)
        if (naive_less(v, *best))
            best = &v;
    FlatSeq out = *best;
    out.push_back(Sign::minus);
    return out;
}

inline bool naive_set_less(const std::vector<FlatSeq>& s, const std::vector<FlatSeq>& t) {
    for (const auto& u : s)
        for (const auto& v : t)
            if (!naive_less(u, v))
                return false;
    return true;
}

inline bool naive_separates(const FlatSeq& w, const std::vector<FlatSeq>& s,
                            const std::vector<FlatSeq>& t) {
    for (const auto& u : s)
        if (!naive_less(u, w))
            return false;
    for (const auto& v : t)
        if (!naive_less(w, v))
            return false;
    return true;
}

inline bool naive_is_prefix(const FlatSeq& prefix, const FlatSeq& s) {
    if (prefix.size() > s.size())
        return false;
    for (std::size_t g = 0; g < prefix.size(); ++g)
        if (prefix[g] != s[g])
            return false;
    return true;
}

// Every separator of length <= bound, in enumeration order.
inline std::vector<FlatSeq> all_separators(const std::vector<FlatSeq>& s,
                                           const std::vector<FlatSeq>& t, std::size_t bound) {
    std::vector<FlatSeq> out;
    for (auto& w : enumerate_surreals(bound))
        if (naive_separates(w, s, t))
            out.push_back(std::move(w));
    return out;
}

// The shortest separator found by exhaustive search up to `bound`.
// Throws std::logic_error if the minimum is not unique at its length or if
// some longer separator does not extend it.
inline FlatSeq brute_min_separator(const std::vector<FlatSeq>& s, const std::vector<FlatSeq>& t,
                                   std::size_t bound) {
    if (!naive_set_less(s, t))
        throw not_separated_error("left set is not below right set");
    const auto found = all_separators(s, t, bound);
    if (found.empty())
        throw none_found_error("no separator of length <= " + std::to_string(bound));
    const FlatSeq& best = found.front();
    for (std::size_t k = 1; k < found.size(); ++k) {
        if (found[k].size() == best.size())
            throw std::logic_error("two shortest separators of the same length");
        if (!naive_is_prefix(best, found[k]))
            throw std::logic_error("a separator does not prolong the shortest one");
    }
    return best;
}

// Evaluates sup* of an increasing chain at g straight from the
// tail-stabilization rule: find a member long enough to be defined at g,
// check that the next member agrees there (members prolong each other, so
// agreement of the two settles every later one) and report the value.
inline SignQuery stabilization_probe(const ChainSpec& c, const Ordinal& g) {
    if (c.tail != Sign::plus)
        throw std::invalid_argument("stabilization_probe expects an increasing chain");

    Ordinal base_len;
    for (const auto& r : c.base.runs())
        base_len += r.count;

    auto member_at = [&](std::size_t i) {
        Ordinal start;
        for (const auto& r : c.base.runs()) {
            const Ordinal end = start + r.count;
            if (g < end)
                return r.sign == Sign::plus ? SignQuery::plus : SignQuery::minus;
            start = end;
        }
        if (g < start + Ordinal{i})
            return SignQuery::plus;
        return SignQuery::undefined;
    };

    if (g >= base_len + Ordinal::omega())
        return SignQuery::undefined;
    std::size_t index = 0;
    if (g >= base_len)
        index = static_cast<std::size_t>(*left_subtract(base_len, g).finite_value()) + 1;
    const auto here = member_at(index);
    if (here == SignQuery::undefined || member_at(index + 1) != here)
        throw std::logic_error("chain members do not stabilize at the probed position");
    return here;
}

inline SignSeq to_signseq(const FlatSeq& s) {
    std::vector<Run> runs;
    runs.reserve(s.size());
    for (Sign x : s)
        runs.push_back(Run{x, Ordinal{1}});
    return SignSeq::from_runs(std::move(runs));
}

// Throws std::invalid_argument for transfinite sequences.
inline FlatSeq to_flat(const SignSeq& s) {
    FlatSeq out;
    for (const auto& r : s.runs()) {
        const auto n = r.count.finite_value();
        if (!n)
            throw std::invalid_argument("'" + to_string(s) + "' is not finite");
        out.insert(out.end(), static_cast<std::size_t>(*n), r.sign);
    }
    return out;
}

inline std::vector<FlatSeq> to_flat(const SurrealSet& s) {
    if (!s.chains.empty())
        throw std::invalid_argument("oracle sets must be finite");
    std::vector<FlatSeq> out;
    for (const auto& e : s.elements)
        out.push_back(to_flat(e));
    return out;
}

inline std::string to_string(const FlatSeq& s) {
    if (s.empty())
        return "0";
    std::string out;
    for (Sign x : s)
        out += to_char(x);
    return out;
}

} // namespace surreal::oracle
