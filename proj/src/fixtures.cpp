#include "orth/fixtures.hpp"

namespace orth {

RealRecurrence chebyshev_t_recurrence(std::size_t levels)
{
    std::vector<double> d(levels, 0.25);
    if (levels > 0)
        d[0] = 0.5;
    return {std::vector<double>(levels, 0.0), std::move(d)};
}

RealRecurrence chebyshev_u_recurrence(std::size_t levels)
{
    return {std::vector<double>(levels, 0.0), std::vector<double>(levels, 0.25)};
}

std::vector<double> chebyshev_u_alpha(std::size_t count)
{
    std::vector<double> a(count, 0.0);
    for (std::size_t j = 1; j < count; j += 2)
        a[j] = -1.0 / static_cast<double>((j - 1) / 2 + 2);
    return a;
}

}  // namespace orth
