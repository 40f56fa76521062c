#pragma once

// Finitely described sets of surreals and their canonical bounds.
//
// A SurrealSet is a finite list of elements plus a finite list of chains
// {base, base x, base x x, ...}. A chain with x = + increases and has no
// maximum; with x = - it decreases and has no minimum.
//
// Order questions about a set reduce to comparing each item with its
// extreme "cut". An increasing chain with limit L = base +^w sits below the
// cut L - - - ... (L followed by minuses forever): every z < L that does not
// prolong L lies below some chain element, while L and every prolongment of
// L lie above all of them. A decreasing chain mirrors this with L + + + ...
// Cuts of that kind are compared by padding both sides past their common
// length with their repeating sign.

#include "surreal/error.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/sign_seq.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace surreal {

struct ChainSpec {
    SignSeq base;
    Sign tail = Sign::plus;

    bool increasing() const noexcept { return tail == Sign::plus; }

    // Member i of the family: base followed by i copies of tail.
    SignSeq element(std::size_t i) const {
        return prolong(base, tail, base.length() + Ordinal{i});
    }

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

struct SurrealSet {
    std::vector<SignSeq> elements;
    std::vector<ChainSpec> chains;

    bool empty() const noexcept { return elements.empty() && chains.empty(); }

    friend bool operator==(const SurrealSet&, const SurrealSet&) = default;
};

struct EmptySet {
    friend bool operator==(EmptySet, EmptySet) { return true; }
};
struct NoExtremum {
    friend bool operator==(NoExtremum, NoExtremum) { return true; }
};

// Outcome of set_max / set_min.
using Extremum = std::variant<SignSeq, NoExtremum, EmptySet>;

// base with an w-block of tail appended. Equals sup* of an increasing chain
// and inf* of a decreasing one.
inline SignSeq chain_limit(const ChainSpec& c) {
    return prolong(c.base, c.tail, c.base.length() + Ordinal::omega());
}

inline ChainSpec negate(const ChainSpec& c) { return ChainSpec{negate(c.base), flip(c.tail)}; }

inline SurrealSet negate(const SurrealSet& s) {
    SurrealSet out;
    out.elements.reserve(s.elements.size());
    for (const auto& e : s.elements)
        out.elements.push_back(negate(e));
    out.chains.reserve(s.chains.size());
    for (const auto& c : s.chains)
        out.chains.push_back(negate(c));
    return out;
}

// Finite elements followed by members 0..n-1 of each chain.
inline std::vector<SignSeq> sample_elements(const SurrealSet& s, std::size_t n) {
    std::vector<SignSeq> out = s.elements;
    for (const auto& c : s.chains)
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(c.element(i));
    return out;
}

namespace detail {

// Either an actual surreal (no tail) or the gap prefix x x x ... that no
// surreal occupies.
struct Cut {
    SignSeq prefix;
    std::optional<Sign> tail;

    bool attained() const noexcept { return !tail; }
};

inline SignSeq materialize(const Cut& c, const Ordinal& len) {
    return c.tail ? prolong(c.prefix, *c.tail, len) : c.prefix;
}

inline std::strong_ordering compare_cuts(const Cut& a, const Cut& b) {
    if (a.attained() && b.attained())
        return compare(a.prefix, b.prefix);
    const Ordinal len = std::max(a.prefix.length(), b.prefix.length()) + Ordinal{1};
    if (auto c = compare(materialize(a, len), materialize(b, len)); c != 0)
        return c;
    // Identical through len: only two gaps with different tails remain.
    if (a.tail == b.tail)
        return std::strong_ordering::equal;
    return a.tail == Sign::minus ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline Cut element_cut(SignSeq s) { return Cut{std::move(s), std::nullopt}; }

// Least cut lying above every member of the chain, or its maximum.
inline Cut upper_cut(const ChainSpec& c) {
    if (c.increasing())
        return Cut{chain_limit(c), Sign::minus};
    return element_cut(c.base);
}

// Greatest cut lying below every member of the chain, or its minimum.
inline Cut lower_cut(const ChainSpec& c) {
    if (c.increasing())
        return element_cut(c.base);
    return Cut{chain_limit(c), Sign::plus};
}

template <typename Visit>
void for_each_upper(const SurrealSet& s, Visit&& visit) {
    for (const auto& e : s.elements)
        visit(element_cut(e));
    for (const auto& c : s.chains)
        visit(upper_cut(c));
}

template <typename Visit>
void for_each_lower(const SurrealSet& s, Visit&& visit) {
    for (const auto& e : s.elements)
        visit(element_cut(e));
    for (const auto& c : s.chains)
        visit(lower_cut(c));
}

// The greatest upper cut over all items; nullopt for the empty set.
inline std::optional<Cut> top_cut(const SurrealSet& s) {
    std::optional<Cut> best;
    for_each_upper(s, [&](Cut c) {
        if (!best || compare_cuts(c, *best) > 0)
            best = std::move(c);
    });
    return best;
}

} // namespace detail

// The maximum of the denoted set, if it has one.
inline Extremum set_max(const SurrealSet& s) {
    auto top = detail::top_cut(s);
    if (!top)
        return EmptySet{};
    if (!top->attained())
        return NoExtremum{};
    return std::move(top->prefix);
}

inline Extremum set_min(const SurrealSet& s) {
    auto m = set_max(negate(s));
    if (auto* v = std::get_if<SignSeq>(&m))
        return negate(*v);
    return m;
}

// True iff every member of s is < z.
inline bool all_less_than(const SurrealSet& s, const SignSeq& z) {
    const auto zc = detail::element_cut(z);
    bool ok = true;
    detail::for_each_upper(s, [&](const detail::Cut& c) {
        if (ok && detail::compare_cuts(c, zc) >= 0)
            ok = false;
    });
    return ok;
}

// True iff every member of t is > z.
inline bool all_greater_than(const SurrealSet& t, const SignSeq& z) {
    return all_less_than(negate(t), negate(z));
}

// True iff every member of s is below every member of t.
inline bool set_less(const SurrealSet& s, const SurrealSet& t) {
    bool ok = true;
    detail::for_each_upper(s, [&](const detail::Cut& up) {
        detail::for_each_lower(t, [&](const detail::Cut& low) {
            if (ok && detail::compare_cuts(up, low) >= 0)
                ok = false;
        });
    });
    return ok;
}

// The canonical upper bound sup* S.
//
// With a maximum u this is u +. Without one, the increasing chain with the
// greatest upper cut is cofinal in S, and the tail-stabilization limit of a
// cofinal chain is its chain_limit. Two chains share a greatest cut only if
// they share the limit, so the choice does not matter.
inline SignSeq sup_star(const SurrealSet& s) {
    auto top = detail::top_cut(s);
    if (!top)
        return SignSeq{};
    if (top->attained())
        return append(top->prefix, Sign::plus);
    return std::move(top->prefix);
}

inline SignSeq inf_star(const SurrealSet& t) { return negate(sup_star(negate(t))); }

// A strict upper bound on the lengths of all members: l(e)+1 for elements,
// l(base)+w for chains, 0 for the empty set.
inline Ordinal length_bound(const SurrealSet& s) {
    Ordinal bound;
    for (const auto& e : s.elements)
        bound = std::max(bound, e.length() + Ordinal{1});
    for (const auto& c : s.chains)
        bound = std::max(bound, c.base.length() + Ordinal::omega());
    return bound;
}

// A set S with sup_star(S) == w.
//
// w = u + gives {u}. A limit length delta + w whose final run is + gives the
// chain of initial segments cut just below the pluses of the last w-block.
// Sequences ending in minuses are not sup* of anything; limit lengths with a
// final block of type w^2 or more have no single-chain witness here.
inline SurrealSet witness_set(const SignSeq& w) {
    if (w.empty())
        return SurrealSet{};
    const auto& last = w.runs().back();
    if (last.sign == Sign::minus)
        throw minus_tail_error("'" + to_string(w) + "' ends with a tail of minuses");
    if (classify(w.length()) == OrdinalKind::successor)
        return SurrealSet{{restrict(w, predecessor(w.length()))}, {}};

    // The final CNF term of the last run carries the final w-block.
    const auto& tail_term = last.count.terms().back();
    if (tail_term.exponent != Ordinal{1})
        throw cofinality_gap_error("length of '" + to_string(w) +
                                   "' is a limit that is not of the form delta+w");
    auto head = last.count.terms();
    if (--head.back().coefficient == 0)
        head.pop_back();
    Ordinal run_start;
    for (std::size_t i = 0; i + 1 < w.runs().size(); ++i)
        run_start += w.runs()[i].count;
    const Ordinal delta = run_start + Ordinal::from_terms(std::move(head));
    return SurrealSet{{}, {ChainSpec{restrict(w, delta), Sign::plus}}};
}

// ---------------------------------------------------------------------------
// Notation
//
//   set  := '{' items? '}' | items?
//   item := surreal | 'chain(' surreal ';' ('+' | '-') ')'
//
// items are comma separated. Output always uses braces.

namespace detail {

inline ChainSpec parse_chain_body(Cursor& in) {
    auto base = parse_surreal_prefix(in);
    in.skip_space();
    in.expect(';');
    in.skip_space();
    Sign tail;
    if (in.accept('+'))
        tail = Sign::plus;
    else if (in.accept('-'))
        tail = Sign::minus;
    else
        throw syntax_error("expected chain tail '+' or '-'", in.pos);
    in.skip_space();
    in.expect(')');
    return ChainSpec{std::move(base), tail};
}

inline void parse_set_item(Cursor& in, SurrealSet& out) {
    in.skip_space();
    if (in.text.substr(in.pos).starts_with("chain(")) {
        in.pos += 6;
        out.chains.push_back(parse_chain_body(in));
    } else {
        out.elements.push_back(parse_surreal_prefix(in));
    }
    in.skip_space();
}

} // namespace detail

inline SurrealSet parse_set(std::string_view text) {
    detail::Cursor in{text};
    SurrealSet out;
    in.skip_space();
    const bool braced = in.accept('{');
    in.skip_space();
    const bool closes_now = braced ? in.peek() == '}' : in.done();
    if (!closes_now) {
        detail::parse_set_item(in, out);
        while (in.accept(','))
            detail::parse_set_item(in, out);
    }
    if (braced)
        in.expect('}');
    in.skip_space();
    if (!in.done())
        throw syntax_error("unexpected character in set", in.pos);
    return out;
}

inline std::string to_string(const ChainSpec& c) {
    return "chain(" + to_string(c.base) + ";" + to_char(c.tail) + ")";
}

inline std::string to_string(const SurrealSet& s) {
    std::string out = "{";
    bool first = true;
    auto sep = [&] {
        if (!first)
            out += ", ";
        first = false;
    };
    for (const auto& e : s.elements) {
        sep();
        out += to_string(e);
    }
    for (const auto& c : s.chains) {
        sep();
        out += to_string(c);
    }
    out += '}';
    return out;
}

} // namespace surreal
