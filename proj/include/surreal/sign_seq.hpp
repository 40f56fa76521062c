#pragma once

// Surreal numbers as transfinite sign sequences.
//
// A sequence is stored as a canonical run-length list: counts are nonzero
// ordinals and adjacent runs alternate in sign. Every operation here works
// on runs and ordinal prefix sums, never on individual positions, so the
// cost is linear in the number of runs regardless of the length.

#include "surreal/error.hpp"
#include "surreal/ordinal.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surreal {

enum class Sign { minus, plus };

// Result of reading a position. Enumerators are declared in the order
// minus < undefined < plus used by the comparison of sequences.
enum class SignQuery { minus, undefined, plus };

constexpr Sign flip(Sign x) noexcept { return x == Sign::plus ? Sign::minus : Sign::plus; }

constexpr SignQuery to_query(Sign x) noexcept {
    return x == Sign::plus ? SignQuery::plus : SignQuery::minus;
}

constexpr char to_char(Sign x) noexcept { return x == Sign::plus ? '+' : '-'; }

struct Run {
    Sign sign;
    Ordinal count;

    friend bool operator==(const Run&, const Run&) = default;
};

class SignSeq {
public:
    SignSeq() = default;

    // Drops empty runs and merges neighbours of equal sign.
    static SignSeq from_runs(std::vector<Run> runs);
    static SignSeq repeat(Sign x, Ordinal count) { return from_runs({Run{x, std::move(count)}}); }

    const std::vector<Run>& runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }
    const Ordinal& length() const noexcept { return length_; }

    // Checks the canonical-form invariants; always true for values built
    // through the public API.
    bool well_formed() const;

    friend bool operator==(const SignSeq& a, const SignSeq& b) { return a.runs_ == b.runs_; }

private:
    std::vector<Run> runs_;
    Ordinal length_;
};

inline SignSeq SignSeq::from_runs(std::vector<Run> runs) {
    SignSeq out;
    out.runs_.reserve(runs.size());
    for (auto& r : runs) {
        if (r.count.is_zero())
            continue;
        out.length_ += r.count;
        if (!out.runs_.empty() && out.runs_.back().sign == r.sign)
            out.runs_.back().count += r.count;
        else
            out.runs_.push_back(std::move(r));
    }
    return out;
}

inline bool SignSeq::well_formed() const {
    Ordinal total;
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        if (runs_[i].count.is_zero())
            return false;
        if (i > 0 && runs_[i].sign == runs_[i - 1].sign)
            return false;
        total += runs_[i].count;
    }
    return total == length_;
}

inline const Ordinal& length(const SignSeq& s) noexcept { return s.length(); }

// The sign at position g, or undefined when g >= length(s).
inline SignQuery value_at(const SignSeq& s, const Ordinal& g) {
    Ordinal end;
    for (const auto& r : s.runs()) {
        end += r.count;
        if (g < end)
            return to_query(r.sign);
    }
    return SignQuery::undefined;
}

// Initial segment of length min(g, length(s)).
inline SignSeq restrict(const SignSeq& s, const Ordinal& g) {
    if (g >= s.length())
        return s;
    std::vector<Run> out;
    Ordinal start;
    for (const auto& r : s.runs()) {
        const Ordinal end = start + r.count;
        if (end > g) {
            out.push_back(Run{r.sign, left_subtract(start, g)});
            break;
        }
        out.push_back(r);
        start = end;
    }
    return SignSeq::from_runs(std::move(out));
}

// Prolongment of s to length eta by repeating x. Throws too_short_error if
// eta < length(s).
inline SignSeq prolong(const SignSeq& s, Sign x, const Ordinal& eta) {
    if (eta < s.length())
        throw too_short_error("cannot prolong a sequence of length " + to_string(s.length()) +
                              " to the shorter length " + to_string(eta));
    if (eta == s.length())
        return s;
    auto runs = s.runs();
    runs.push_back(Run{x, left_subtract(s.length(), eta)});
    return SignSeq::from_runs(std::move(runs));
}

// s followed by a single x.
inline SignSeq append(const SignSeq& s, Sign x) { return prolong(s, x, s.length() + Ordinal{1}); }

inline SignSeq negate(const SignSeq& s) {
    auto runs = s.runs();
    for (auto& r : runs)
        r.sign = flip(r.sign);
    return SignSeq::from_runs(std::move(runs));
}

namespace detail {

struct Divergence {
    Ordinal position;
    SignQuery left;
    SignQuery right;
};

// Least position where s and t differ, counting "one defined, one not" as a
// difference, together with the two values found there.
inline std::optional<Divergence> diverge(const SignSeq& s, const SignSeq& t) {
    const auto& a = s.runs();
    const auto& b = t.runs();
    std::size_t i = 0;
    std::size_t j = 0;
    Ordinal pos;
    Ordinal left = a.empty() ? Ordinal{} : a[0].count;
    Ordinal right = b.empty() ? Ordinal{} : b[0].count;
    for (;;) {
        const bool has_left = i < a.size();
        const bool has_right = j < b.size();
        if (!has_left && !has_right)
            return std::nullopt;
        if (!has_left || !has_right || a[i].sign != b[j].sign) {
            return Divergence{pos, has_left ? to_query(a[i].sign) : SignQuery::undefined,
                              has_right ? to_query(b[j].sign) : SignQuery::undefined};
        }
        const auto c = left <=> right;
        if (c == 0) {
            pos += left;
            ++i;
            ++j;
            if (i < a.size())
                left = a[i].count;
            if (j < b.size())
                right = b[j].count;
        } else if (c < 0) {
            pos += left;
            right = left_subtract(left, right);
            if (++i < a.size())
                left = a[i].count;
        } else {
            pos += right;
            left = left_subtract(right, left);
            if (++j < b.size())
                right = b[j].count;
        }
    }
}

} // namespace detail

// Least g with s(g) != t(g); nullopt when s == t.
inline std::optional<Ordinal> first_difference(const SignSeq& s, const SignSeq& t) {
    if (auto d = detail::diverge(s, t))
        return std::move(d->position);
    return std::nullopt;
}

// Lexicographic order with - < undefined < +.
inline std::strong_ordering compare(const SignSeq& s, const SignSeq& t) {
    const auto d = detail::diverge(s, t);
    if (!d)
        return std::strong_ordering::equal;
    return d->left <=> d->right;
}

inline std::strong_ordering operator<=>(const SignSeq& s, const SignSeq& t) { return compare(s, t); }

// True iff t is an initial segment of s (s prolongs t).
inline bool is_initial_segment(const SignSeq& t, const SignSeq& s) {
    if (t.length() > s.length())
        return false;
    const auto d = detail::diverge(t, s);
    return !d || d->left == SignQuery::undefined;
}

// ---------------------------------------------------------------------------
// Notation
//
//   surreal := '0' | run+
//   run     := ('+' | '-') ('^' count)?
//   count   := ordinal | '(' ordinal ')'
//
// Whitespace between runs is optional. Output separates runs by one space,
// omits a count of 1 and parenthesizes counts with more than one CNF term.

namespace detail {

inline bool starts_run(char c) noexcept { return c == '+' || c == '-'; }

// Parses a surreal starting at the cursor and stops at the first character
// that cannot continue it.
inline SignSeq parse_surreal_prefix(Cursor& in) {
    in.skip_space();
    if (in.peek() == '0' && !is_digit(in.peek(1))) {
        ++in.pos;
        return SignSeq{};
    }
    if (!starts_run(in.peek()))
        throw syntax_error("expected '+', '-' or '0'", in.pos);
    std::vector<Run> runs;
    while (starts_run(in.peek())) {
        const Sign x = in.peek() == '+' ? Sign::plus : Sign::minus;
        ++in.pos;
        Ordinal count{1};
        if (in.accept('^')) {
            const auto at = in.pos;
            if (in.accept('(')) {
                count = parse_ordinal_expr(in);
                in.expect(')');
            } else {
                count = parse_ordinal_expr(in);
            }
            if (count.is_zero())
                throw zero_run_error(at);
        }
        runs.push_back(Run{x, std::move(count)});
        const auto mark = in.pos;
        in.skip_space();
        if (!starts_run(in.peek()))
            in.pos = mark;
    }
    return SignSeq::from_runs(std::move(runs));
}

} // namespace detail

inline SignSeq parse_surreal(std::string_view text) {
    detail::Cursor in{text};
    auto s = detail::parse_surreal_prefix(in);
    in.skip_space();
    if (!in.done())
        throw syntax_error("unexpected character in surreal", in.pos);
    return s;
}

inline std::string to_string(const SignSeq& s) {
    if (s.empty())
        return "0";
    std::string out;
    for (const auto& r : s.runs()) {
        if (!out.empty())
            out += ' ';
        out += to_char(r.sign);
        if (r.count == Ordinal{1})
            continue;
        out += '^';
        if (r.count.terms().size() > 1) {
            out += '(';
            detail::append_ordinal(out, r.count);
            out += ')';
        } else {
            detail::append_ordinal(out, r.count);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SignSeq& s) { return os << to_string(s); }

inline std::string to_string(SignQuery q) {
    switch (q) {
    case SignQuery::minus:
        return "-";
    case SignQuery::plus:
        return "+";
    case SignQuery::undefined:
        break;
    }
    return "undefined";
}

} // namespace surreal
