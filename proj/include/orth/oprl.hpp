#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orth/error.hpp"
#include "orth/polyhom.hpp"
#include "orth/scalar.hpp"

namespace orth {

/// Recurrence coefficients of monic OPRL,
///   P_{n+1}(x) = (x - b_{n+1}) P_n(x) - d_n P_{n-1}(x),  P_{-1} = 0, P_0 = 1.
/// Both sequences are indexed from 1; d_0 = 1 is implicit and never stored.
template <typename R>
class BasicRecurrence {
public:
    BasicRecurrence() = default;

    BasicRecurrence(std::vector<R> b, std::vector<R> d) : b_(std::move(b)), d_(std::move(d))
    {
        for (std::size_t i = 0; i < d_.size(); ++i)
            if (d_[i] == R(0))
                throw Error(Errc::non_positive_d, "d_" + std::to_string(i + 1) + " is zero", i + 1);
    }

    /// b_n, n >= 1.
    const R& b(std::size_t n) const
    {
        if (n == 0 || n > b_.size())
            throw_insufficient("b", n, b_.size());
        return b_[n - 1];
    }

    /// d_n, n >= 1.
    const R& d(std::size_t n) const
    {
        if (n == 0 || n > d_.size())
            throw_insufficient("d", n, d_.size());
        return d_[n - 1];
    }

    const std::vector<R>& b_values() const noexcept { return b_; }
    const std::vector<R>& d_values() const noexcept { return d_; }
    std::size_t size_b() const noexcept { return b_.size(); }
    std::size_t size_d() const noexcept { return d_.size(); }
    /// Number of levels n for which both b_n and d_n are stored.
    std::size_t levels() const noexcept { return std::min(b_.size(), d_.size()); }

    bool positive_definite() const
    {
        for (const auto& v : d_)
            if (!(v > R(0)))
                return false;
        return true;
    }

    /// Requires b_1..b_nb and d_1..d_nd.
    void require(std::size_t nb, std::size_t nd, const char* what) const
    {
        if (b_.size() < nb)
            throw_insufficient(std::string(what) + " (b)", nb, b_.size());
        if (d_.size() < nd)
            throw_insufficient(std::string(what) + " (d)", nd, d_.size());
    }

    friend bool operator==(const BasicRecurrence&, const BasicRecurrence&) = default;

private:
    std::vector<R> b_;
    std::vector<R> d_;
};

using RealRecurrence = BasicRecurrence<double>;

/// Leading N x N section of the monic Jacobi matrix: diagonal b_1..b_N,
/// superdiagonal ones, subdiagonal d_1..d_{N-1}.
struct JacobiMatrix {
    std::vector<double> diagonal;
    std::vector<double> subdiagonal;

    std::size_t order() const noexcept { return diagonal.size(); }
    /// Entry (i, j), zero-based.
    double at(std::size_t i, std::size_t j) const noexcept;
};

/// P_0(x)..P_n(x). Needs b_1..b_n and d_1..d_{n-1}.
std::vector<cplx> oprl_eval(const RealRecurrence& rc, std::size_t n, cplx x);

/// P_0..P_n in coefficient form.
std::vector<Poly> monic_polynomials(const RealRecurrence& rc, std::size_t n);

JacobiMatrix jacobi_matrix(const RealRecurrence& rc, std::size_t order);

/// gamma_n = (d_1 ... d_n)^{-1/2}; p_n = gamma_n P_n is orthonormal for a
/// probability measure.
double orthonormal_scale(const RealRecurrence& rc, std::size_t n);

/// Associated family of order k: b^_n = b_{n+k}, d^_n = d_{n+k}.
template <typename R>
BasicRecurrence<R> shift_coefficients(const BasicRecurrence<R>& rc, std::size_t k)
{
    rc.require(k, k, "shift_coefficients");
    const auto& b = rc.b_values();
    const auto& d = rc.d_values();
    return {std::vector<R>(b.begin() + static_cast<std::ptrdiff_t>(k), b.end()),
            std::vector<R>(d.begin() + static_cast<std::ptrdiff_t>(k), d.end())};
}

/// Anti-associated family of order k = pre_b.size(): the k new levels sit in
/// front of the original Jacobi matrix, pre_d.back() couples them to b_1.
template <typename R>
BasicRecurrence<R> prepend_coefficients(const BasicRecurrence<R>& rc, std::span<const R> pre_b,
                                        std::span<const R> pre_d)
{
    if (pre_b.size() != pre_d.size())
        throw Error(Errc::invalid_prepend, "prepended b and d lists differ in length");
    for (std::size_t i = 0; i < pre_d.size(); ++i)
        if (pre_d[i] == R(0))
            throw Error(Errc::invalid_prepend, "prepended d_" + std::to_string(i + 1) + " is zero",
                        i + 1);
    std::vector<R> b(pre_b.begin(), pre_b.end());
    std::vector<R> d(pre_d.begin(), pre_d.end());
    b.insert(b.end(), rc.b_values().begin(), rc.b_values().end());
    d.insert(d.end(), rc.d_values().begin(), rc.d_values().end());
    return {std::move(b), std::move(d)};
}

}  // namespace orth
