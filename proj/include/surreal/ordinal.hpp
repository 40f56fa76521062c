#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a list of terms w^e * c with strictly decreasing exponents e
// (themselves ordinals) and coefficients c >= 1. The empty list is 0.

#include "surreal/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surreal {

struct CnfTerm;

class Ordinal {
public:
    using coefficient_type = std::uint64_t;

    Ordinal() = default;
    Ordinal(coefficient_type n); // NOLINT: finite ordinals convert implicitly

    static Ordinal omega();
    // w^exponent * coefficient. coefficient 0 yields 0.
    static Ordinal omega_power(Ordinal exponent, coefficient_type coefficient = 1);
    // Validates CNF ordering; throws std::invalid_argument otherwise.
    static Ordinal from_terms(std::vector<CnfTerm> terms);

    const std::vector<CnfTerm>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    // Value of a finite ordinal; nullopt when >= w.
    std::optional<coefficient_type> finite_value() const noexcept;

    friend bool operator==(const Ordinal& a, const Ordinal& b);
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
    std::vector<CnfTerm> terms_;
};

struct CnfTerm {
    Ordinal exponent;
    Ordinal::coefficient_type coefficient = 1;

    friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

enum class OrdinalKind { limit, successor };

namespace detail {

inline Ordinal::coefficient_type checked_add(Ordinal::coefficient_type a,
                                             Ordinal::coefficient_type b) {
    if (a > std::numeric_limits<Ordinal::coefficient_type>::max() - b)
        throw std::overflow_error("ordinal coefficient overflow");
    return a + b;
}

} // namespace detail

inline Ordinal::Ordinal(coefficient_type n) {
    if (n != 0)
        terms_.push_back(CnfTerm{Ordinal{}, n});
}

inline Ordinal Ordinal::omega() { return omega_power(Ordinal{1}); }

inline Ordinal Ordinal::omega_power(Ordinal exponent, coefficient_type coefficient) {
    Ordinal out;
    if (coefficient != 0)
        out.terms_.push_back(CnfTerm{std::move(exponent), coefficient});
    return out;
}

inline Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0)
            throw std::invalid_argument("CNF coefficient must be positive");
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
            throw std::invalid_argument("CNF exponents must strictly decrease");
    }
    Ordinal out;
    out.terms_ = std::move(terms);
    return out;
}

inline bool Ordinal::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

inline std::optional<Ordinal::coefficient_type> Ordinal::finite_value() const noexcept {
    if (terms_.empty())
        return 0;
    if (is_finite())
        return terms_.front().coefficient;
    return std::nullopt;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (auto c = x.exponent <=> y.exponent; c != 0)
            return c;
        if (auto c = x.coefficient <=> y.coefficient; c != 0)
            return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

// Ordinal sum. Terms of a below the leading exponent of b are absorbed.
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero())
        return a;
    const auto& lead = b.terms().front();
    std::vector<CnfTerm> out;
    out.reserve(a.terms().size() + b.terms().size());
    for (const auto& t : a.terms()) {
        if (t.exponent > lead.exponent) {
            out.push_back(t);
        } else {
            if (t.exponent == lead.exponent) {
                out.push_back(CnfTerm{lead.exponent, detail::checked_add(t.coefficient, lead.coefficient)});
                out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
                return Ordinal::from_terms(std::move(out));
            }
            break;
        }
    }
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

inline Ordinal& operator+=(Ordinal& a, const Ordinal& b) { return a = a + b; }

// The unique g with a + g == b. Throws underflow_error if a > b.
inline Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
    if (a > b)
        throw underflow_error("left subtraction underflow: minuend is smaller than subtrahend");
    const auto& at = a.terms();
    const auto& bt = b.terms();
    std::size_t i = 0;
    while (i < at.size() && at[i] == bt[i])
        ++i;
    if (i == at.size())
        return Ordinal::from_terms({bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end()});
    // a < b, so the first differing term of b is larger.
    std::vector<CnfTerm> rest;
    if (at[i].exponent == bt[i].exponent)
        rest.push_back(CnfTerm{bt[i].exponent, bt[i].coefficient - at[i].coefficient});
    else
        rest.push_back(bt[i]);
    rest.insert(rest.end(), bt.begin() + static_cast<std::ptrdiff_t>(i) + 1, bt.end());
    return Ordinal::from_terms(std::move(rest));
}

// 0 counts as a limit.
inline OrdinalKind classify(const Ordinal& a) {
    if (!a.is_zero() && a.terms().back().exponent.is_zero())
        return OrdinalKind::successor;
    return OrdinalKind::limit;
}

// b with b + 1 == a. Requires a successor.
inline Ordinal predecessor(const Ordinal& a) {
    if (classify(a) != OrdinalKind::successor)
        throw std::invalid_argument("predecessor of a limit ordinal");
    auto terms = a.terms();
    if (--terms.back().coefficient == 0)
        terms.pop_back();
    return Ordinal::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Notation
//
//   ordinal := term ('+' term)* | '0'
//   term    := nat | 'w' ('^' atom)? ('*' nat)?
//   atom    := nat | 'w' | '(' ordinal ')'
//   nat     := [1-9][0-9]*

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const noexcept { return pos >= text.size(); }
    char peek(std::size_t ahead = 0) const noexcept {
        return pos + ahead < text.size() ? text[pos + ahead] : '\0';
    }
    bool accept(char c) noexcept {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw syntax_error(std::string("expected '") + c + "'", pos);
    }
    void skip_space() noexcept {
        while (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')
            ++pos;
    }
};

inline bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

inline Ordinal::coefficient_type parse_nat(Cursor& in) {
    if (in.peek() < '1' || in.peek() > '9')
        throw syntax_error("expected a positive integer", in.pos);
    Ordinal::coefficient_type v = 0;
    const auto start = in.pos;
    while (is_digit(in.peek())) {
        const auto d = static_cast<Ordinal::coefficient_type>(in.peek() - '0');
        if (v > (std::numeric_limits<Ordinal::coefficient_type>::max() - d) / 10)
            throw syntax_error("integer too large", start);
        v = v * 10 + d;
        ++in.pos;
    }
    return v;
}

inline Ordinal parse_ordinal_expr(Cursor& in);

inline Ordinal parse_atom(Cursor& in) {
    if (in.accept('w'))
        return Ordinal::omega();
    if (in.accept('(')) {
        auto inner = parse_ordinal_expr(in);
        in.expect(')');
        return inner;
    }
    return Ordinal{parse_nat(in)};
}

inline Ordinal parse_term(Cursor& in) {
    if (!in.accept('w'))
        return Ordinal{parse_nat(in)};
    Ordinal exponent{1};
    if (in.accept('^'))
        exponent = parse_atom(in);
    Ordinal::coefficient_type coefficient = 1;
    if (in.accept('*'))
        coefficient = parse_nat(in);
    return Ordinal::omega_power(std::move(exponent), coefficient);
}

inline bool starts_term(char c) noexcept { return c == 'w' || (c >= '1' && c <= '9'); }

// Consumes the longest ordinal at the cursor. A '+' is taken as a sum only
// when a term follows it, so "+^3+-" stops after the 3.
inline Ordinal parse_ordinal_expr(Cursor& in) {
    if (in.peek() == '0' && !is_digit(in.peek(1))) {
        ++in.pos;
        return Ordinal{};
    }
    auto value = parse_term(in);
    while (in.peek() == '+' && starts_term(in.peek(1))) {
        ++in.pos;
        value += parse_term(in);
    }
    return value;
}

inline void append_atom(std::string& out, const Ordinal& e);

inline void append_ordinal(std::string& out, const Ordinal& a) {
    if (a.is_zero()) {
        out += '0';
        return;
    }
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first)
            out += '+';
        first = false;
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        out += 'w';
        if (t.exponent != Ordinal{1}) {
            out += '^';
            append_atom(out, t.exponent);
        }
        if (t.coefficient != 1) {
            out += '*';
            out += std::to_string(t.coefficient);
        }
    }
}

inline void append_atom(std::string& out, const Ordinal& e) {
    if (e.is_finite() || e == Ordinal::omega()) {
        append_ordinal(out, e);
        return;
    }
    out += '(';
    append_ordinal(out, e);
    out += ')';
}

} // namespace detail

// Non-canonical sums such as "w+w^2" are normalized by ordinal addition.
inline Ordinal parse_ordinal(std::string_view text) {
    detail::Cursor in{text};
    in.skip_space();
    if (in.done())
        throw syntax_error("empty ordinal", in.pos);
    auto value = detail::parse_ordinal_expr(in);
    in.skip_space();
    if (!in.done())
        throw syntax_error("unexpected character in ordinal", in.pos);
    return value;
}

inline std::string to_string(const Ordinal& a) {
    std::string out;
    detail::append_ordinal(out, a);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

} // namespace surreal
