#pragma once

#include <cstddef>
#include <vector>

#include "orth/oprl.hpp"
#include "orth/opuc.hpp"

namespace orth {

/// Chebyshev first kind: b = 0, d_1 = 1/2, d_n = 1/4. Szegő image alpha = 0.
RealRecurrence chebyshev_t_recurrence(std::size_t levels);

/// Chebyshev second kind: b = 0, d = 1/4.
RealRecurrence chebyshev_u_recurrence(std::size_t levels);

/// Szegő image of the second kind: alpha_{2m} = 0, alpha_{2m+1} = -1 / (m + 2).
std::vector<double> chebyshev_u_alpha(std::size_t count);

inline VerblunskySeq as_complex(const std::vector<double>& alpha)
{
    return VerblunskySeq::from_real(alpha);
}

}  // namespace orth
