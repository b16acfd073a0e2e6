#include "orth/error.hpp"

namespace orth {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::insufficient_coefficients: return "InsufficientCoefficients";
    case Errc::denominator_vanishes: return "DenominatorVanishes";
    case Errc::pole_hit: return "PoleHit";
    case Errc::outside_domain: return "OutsideDomain";
    case Errc::support_violation: return "SupportViolation";
    case Errc::division_degenerate: return "DivisionDegenerate";
    case Errc::complex_alpha: return "ComplexAlpha";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::invalid_prepend: return "InvalidPrepend";
    case Errc::invalid_xi: return "InvalidXi";
    case Errc::invalid_eta: return "InvalidEta";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::zero_argument: return "ZeroArgument";
    case Errc::non_positive_d: return "NonPositiveD";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, std::string message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index)
{
}

void throw_insufficient(std::string_view what, std::size_t needed, std::size_t have)
{
    throw Error(Errc::insufficient_coefficients,
                std::string(what) + " needs " + std::to_string(needed) + " coefficients, have " +
                    std::to_string(have),
                needed);
}

}  // namespace orth
