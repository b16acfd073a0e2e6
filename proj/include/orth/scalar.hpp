#pragma once

#include <complex>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace orth {

using cplx = std::complex<double>;

/// IEEE binary128-equivalent software float. Used for the real Szegő bridge
/// kernels when identities must be checked below the conditioning floor of
/// binary64.
using extended = boost::multiprecision::cpp_bin_float_quad;

/// Scale-aware pole guard: a denominator is treated as zero when
/// |den| <= kDenominatorTol * (1 + |num|).
inline constexpr double kDenominatorTol = 1e-13;

/// Verblunsky coefficients with |alpha| >= 1 - kSupportTol are rejected.
inline constexpr double kSupportTol = 1e-12;

}  // namespace orth
