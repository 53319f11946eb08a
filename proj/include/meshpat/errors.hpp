#pragma once

#include <stdexcept>
#include <string>

namespace meshpat {

enum class Errc {
    not_a_permutation,
    box_out_of_grid,
    box_not_shaded,
    empty_pattern,
    corner_shaded,
    not_in_gamma,
    no_zero,
    not_contained,
    not_comparable,
    not_a_cover,
    not_an_occurrence,
    invalid_occurrence,
    precondition_failed,
    budget_exceeded,
    too_large,
    parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace meshpat
