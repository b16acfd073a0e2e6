#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/szego.hpp"

namespace orth {

/// |a - b| / max(1, |b|): relative for large entries, absolute near zero.
template <typename R>
double scaled_diff(const R& a, const R& b)
{
    using std::abs;
    const auto diff = abs(a - b);
    const auto mag = abs(b);
    const auto scale = mag > decltype(mag)(1) ? mag : decltype(mag)(1);
    return static_cast<double>(diff / scale);
}

template <typename R>
double max_scaled_diff(const std::vector<R>& a, const std::vector<R>& b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = scaled_diff(a[i], b[i]);
        if (std::isnan(d))
            return d;
        worst = std::max(worst, d);
    }
    return worst;
}

template <typename R>
double max_scaled_diff(const BasicRecurrence<R>& a, const BasicRecurrence<R>& b)
{
    return std::max(max_scaled_diff(a.b_values(), b.b_values()), max_scaled_diff(a.d_values(), b.d_values()));
}

template <typename R>
double max_scaled_diff(const BasicRealVerblunsky<R>& a, const BasicRealVerblunsky<R>& b)
{
    return max_scaled_diff(a.values(), b.values());
}

template <typename R>
double max_scaled_diff(const BasicVSeq<R>& a, const BasicVSeq<R>& b)
{
    return max_scaled_diff(a.values(), b.values());
}

}  // namespace orth
