#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shrub {

// Base class for all rejected inputs: bad wire data, violated preconditions,
// failed domain invariants. The CLI maps these to exit code 1.
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A lattice path that fails its alphabet, bound, or endpoint contract.
class invalid_path : public invalid_input {
public:
    using invalid_input::invalid_input;
};

// A permutation that does not read out from any shrub forest of the requested
// arity. Carries the 0-based index of the first offending block.
class not_a_shrub_word : public invalid_input {
public:
    not_a_shrub_word(std::size_t block_index, const std::string& what)
        : invalid_input(what), block_(block_index) {}
    std::size_t block_index() const { return block_; }

private:
    std::size_t block_;
};

// Malformed serialized data. Carries the 1-based line number.
class parse_error : public invalid_input {
public:
    parse_error(std::size_t line, const std::string& what)
        : invalid_input(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A search that hit its node budget before finishing.
class budget_exceeded : public invalid_input {
public:
    using invalid_input::invalid_input;
};

}  // namespace shrub
