#pragma once

#include <stdexcept>
#include <string>

namespace latwalk {

enum class Errc {
    empty_support,
    weight_sum_mismatch,
    non_positive_weight,
    non_positive_denominator,
    duplicate_atom,
    denominator_mismatch,
    exact_cap_exceeded,
    zero_second_moment,
    asymmetric_law,
    malformed_law_file,
    invalid_argument,
    io_error,
};

/// Stable identifier used in error messages and CLI diagnostics.
const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace latwalk
