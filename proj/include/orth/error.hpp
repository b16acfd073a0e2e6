#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orth {

enum class Errc {
    insufficient_coefficients,
    denominator_vanishes,
    pole_hit,
    outside_domain,
    support_violation,
    division_degenerate,
    complex_alpha,
    alpha_out_of_range,
    invalid_prepend,
    invalid_xi,
    invalid_eta,
    invalid_spec,
    zero_argument,
    non_positive_d,
    unknown_suite,
    parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure in the library is reported through this exception. `index()`
/// carries the sequence position (Verblunsky or recurrence index) when the
/// failure is tied to one, and `needed()` the required length for
/// insufficient-coefficient failures.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::optional<std::size_t> index = std::nullopt);

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    Errc code_;
    std::optional<std::size_t> index_;
};

[[noreturn]] void throw_insufficient(std::string_view what, std::size_t needed, std::size_t have);

}  // namespace orth
