#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surreal {

// Malformed notation. Carries the 0-based offset into the parsed text.
class syntax_error : public std::runtime_error {
public:
    syntax_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A run count that evaluates to the ordinal 0, e.g. "+^0".
class zero_run_error : public syntax_error {
public:
    explicit zero_run_error(std::size_t position)
        : syntax_error("run count must be at least 1", position) {}
};

// Base for well-formed requests that have no answer.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Left subtraction a - b requested with a > b.
class underflow_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Prolongment to a length below the current one.
class too_short_error : public domain_error {
public:
    using domain_error::domain_error;
};

// A separator was requested for sets that are not strictly ordered.
class not_separated_error : public domain_error {
public:
    using domain_error::domain_error;
};

// The sequence ends with a block of minuses and is not of the form sup* S.
class minus_tail_error : public domain_error {
public:
    using domain_error::domain_error;
};

// The length is a limit that is not of the form delta + w.
class cofinality_gap_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Exhaustive search found no separator within the bound.
class none_found_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace surreal
