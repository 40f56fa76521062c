#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it in-process.
//
// Arguments are parsed by hand: surreal literals such as "-+" or "-^w" look
// like short options to general-purpose parsers.

#include "surreal/error.hpp"
#include "surreal/oracle.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/separation.hpp"
#include "surreal/sets.hpp"
#include "surreal/sign_seq.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surreal::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_syntax = 2;

inline constexpr std::string_view usage_text =
    R"(usage: surreal <command> [args]

commands:
  cmp A B                      compare two surreals, prints <, = or >
  len A                        length of A
  restrict A G                 initial segment of A of length G
  at A G                       sign of A at position G (+, - or undefined)
  sup SET | inf SET            canonical bounds sup* and inf*
  sep A B                      ordered separator of A and B
  separate --left SET --right SET [--method sep|hat|endpoint|brute]
                               shortest separator (endpoint: longer bound)
  check W --left SET --right SET
                               whether W separates the sets (true/false)
  witness W                    a set whose sup* is W
  oracle bruteforce --left SET --right SET --bound N
                               exhaustive shortest separator of finite sets
  ord add|sub|cmp A B          ordinal sum, left difference, comparison

notation:
  ordinal  w^2*3+w+4, w^(w+1), 0
  surreal  +^w -^3 +, 0 for the empty sequence
  SET      {a, b, chain(base;+)}, braces optional, or @file with one item per line
)";

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string, std::less<>> options;

    const std::string& option(std::string_view name) const {
        auto it = options.find(name);
        if (it == options.end())
            throw usage_error("missing --" + std::string(name));
        return it->second;
    }
    std::string option_or(std::string_view name, std::string fallback) const {
        auto it = options.find(name);
        return it == options.end() ? fallback : it->second;
    }
};

inline Args split_args(const std::vector<std::string>& argv, std::size_t from) {
    static constexpr std::string_view known[] = {"left", "right", "method", "bound"};
    Args out;
    for (std::size_t i = from; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        if (!a.starts_with("--") || a == "--") {
            out.positional.push_back(a);
            continue;
        }
        std::string name = a.substr(2);
        std::string value;
        if (auto eq = name.find('='); eq != std::string::npos) {
            value = name.substr(eq + 1);
            name.resize(eq);
        } else {
            if (i + 1 >= argv.size())
                throw usage_error("--" + name + " needs a value");
            value = argv[++i];
        }
        if (std::find(std::begin(known), std::end(known), name) == std::end(known))
            throw usage_error("unknown option --" + name);
        out.options[name] = value;
    }
    return out;
}

inline void expect_positional(const Args& a, std::size_t n, std::string_view command) {
    if (a.positional.size() != n)
        throw usage_error(std::string(command) + " expects " + std::to_string(n) + " argument(s)");
}

inline std::string read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot open " + path);
    std::string line;
    std::string items;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (!items.empty())
            items += ',';
        items += line;
    }
    return items;
}

inline SurrealSet load_set(const std::string& arg) {
    if (arg.starts_with('@'))
        return parse_set(read_set_file(arg.substr(1)));
    return parse_set(arg);
}

inline const char* order_symbol(std::strong_ordering c) {
    if (c < 0)
        return "<";
    if (c > 0)
        return ">";
    return "=";
}

inline std::size_t parse_count(const std::string& text) {
    std::size_t v = 0;
    const auto* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw usage_error("expected a non-negative integer, got '" + text + "'");
    return v;
}

inline std::size_t finite_length(const SignSeq& s) {
    const auto n = s.length().finite_value();
    if (!n)
        throw usage_error("finite sets required");
    return static_cast<std::size_t>(*n);
}

inline SignSeq brute_separator(const SurrealSet& left, const SurrealSet& right,
                               std::optional<std::size_t> bound) {
    if (!left.chains.empty() || !right.chains.empty())
        throw usage_error("brute force needs finite sets (no chains)");
    const auto s = oracle::to_flat(left);
    const auto t = oracle::to_flat(right);
    const std::size_t limit = bound.value_or(
        std::max(oracle::naive_sup_star(s).size(), oracle::naive_inf_star(t).size()));
    return oracle::to_signseq(oracle::brute_min_separator(s, t, limit));
}

inline void dispatch(const std::vector<std::string>& argv, std::ostream& out) {
    const std::string& cmd = argv.front();
    if (cmd == "cmp") {
        auto a = split_args(argv, 1);
        expect_positional(a, 2, cmd);
        out << order_symbol(compare(parse_surreal(a.positional[0]), parse_surreal(a.positional[1])))
            << '\n';
    } else if (cmd == "len") {
        auto a = split_args(argv, 1);
        expect_positional(a, 1, cmd);
        out << parse_surreal(a.positional[0]).length() << '\n';
    } else if (cmd == "restrict") {
        auto a = split_args(argv, 1);
        expect_positional(a, 2, cmd);
        out << restrict(parse_surreal(a.positional[0]), parse_ordinal(a.positional[1])) << '\n';
    } else if (cmd == "at") {
        auto a = split_args(argv, 1);
        expect_positional(a, 2, cmd);
        out << to_string(value_at(parse_surreal(a.positional[0]), parse_ordinal(a.positional[1])))
            << '\n';
    } else if (cmd == "sup" || cmd == "inf") {
        auto a = split_args(argv, 1);
        expect_positional(a, 1, cmd);
        const auto s = load_set(a.positional[0]);
        out << (cmd == "sup" ? sup_star(s) : inf_star(s)) << '\n';
    } else if (cmd == "sep") {
        auto a = split_args(argv, 1);
        expect_positional(a, 2, cmd);
        out << sep(parse_surreal(a.positional[0]), parse_surreal(a.positional[1])) << '\n';
    } else if (cmd == "separate") {
        auto a = split_args(argv, 1);
        expect_positional(a, 0, cmd);
        const auto left = load_set(a.option("left"));
        const auto right = load_set(a.option("right"));
        const auto method = a.option_or("method", "sep");
        if (method == "sep")
            out << shortest_separator_via_sep(left, right) << '\n';
        else if (method == "hat")
            out << shortest_separator(left, right) << '\n';
        else if (method == "endpoint")
            out << endpoint_separator(left, right).value << '\n';
        else if (method == "brute")
            out << brute_separator(left, right, std::nullopt) << '\n';
        else
            throw usage_error("unknown method '" + method + "'");
    } else if (cmd == "check") {
        auto a = split_args(argv, 1);
        expect_positional(a, 1, cmd);
        const auto w = parse_surreal(a.positional[0]);
        out << (separates(w, load_set(a.option("left")), load_set(a.option("right"))) ? "true"
                                                                                       : "false")
            << '\n';
    } else if (cmd == "witness") {
        auto a = split_args(argv, 1);
        expect_positional(a, 1, cmd);
        out << to_string(witness_set(parse_surreal(a.positional[0]))) << '\n';
    } else if (cmd == "oracle") {
        if (argv.size() < 2 || argv[1] != "bruteforce")
            throw usage_error("oracle supports: bruteforce");
        auto a = split_args(argv, 2);
        expect_positional(a, 0, "oracle bruteforce");
        out << brute_separator(load_set(a.option("left")), load_set(a.option("right")),
                               parse_count(a.option("bound")))
            << '\n';
    } else if (cmd == "ord") {
        auto a = split_args(argv, 1);
        expect_positional(a, 3, cmd);
        const auto& op = a.positional[0];
        const auto x = parse_ordinal(a.positional[1]);
        const auto y = parse_ordinal(a.positional[2]);
        if (op == "add")
            out << x + y << '\n';
        else if (op == "sub")
            out << left_subtract(x, y) << '\n';
        else if (op == "cmp")
            out << order_symbol(x <=> y) << '\n';
        else
            throw usage_error("ord supports: add, sub, cmp");
    } else {
        throw usage_error("unknown command '" + cmd + "'");
    }
}

} // namespace detail

// Exit status: 0 on success, 1 for domain errors, 2 for syntax or usage
// errors.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    if (argv.empty() || argv.front() == "help" || argv.front() == "--help" || argv.front() == "-h") {
        (argv.empty() ? err : out) << usage_text;
        return argv.empty() ? exit_syntax : exit_ok;
    }
    try {
        detail::dispatch(argv, out);
        return exit_ok;
    } catch (const syntax_error& e) {
        err << "syntax error: " << e.what() << '\n';
        return exit_syntax;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_syntax;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace surreal::cli
