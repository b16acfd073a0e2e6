#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/scalar.hpp"

namespace orth {

/// LU data of J + I: v_k = (1 + alpha_k)(1 - alpha_{k-1}) / 2, indexed from 0,
/// with the slot v_{-1} = 0.
template <typename R>
class BasicVSeq {
public:
    BasicVSeq() = default;
    explicit BasicVSeq(std::vector<R> v) : v_(std::move(v)) {}

    const R& operator[](std::size_t k) const
    {
        if (k >= v_.size())
            throw_insufficient("v", k + 1, v_.size());
        return v_[k];
    }
    /// v_k with v_{-1} = 0.
    R ext(std::ptrdiff_t k) const { return k < 0 ? R(0) : (*this)[static_cast<std::size_t>(k)]; }

    const std::vector<R>& values() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }

    friend bool operator==(const BasicVSeq&, const BasicVSeq&) = default;

private:
    std::vector<R> v_;
};

using VSeq = BasicVSeq<double>;

/// Geronimus relations, measure on [-1, 1] -> Szegő image on the circle:
///   d_{m+1} = (1 - a_{2m-1})(1 - a_{2m}^2)(1 + a_{2m+1}) / 4
///   b_{m+1} = [a_{2m}(1 - a_{2m-1}) - a_{2m-2}(1 + a_{2m-1})] / 2
/// with a_{-1} = -1. Reads alpha_0..alpha_{2n-1}, writes n levels.
template <typename R>
BasicRecurrence<R> geronimus_forward(const BasicRealVerblunsky<R>& alpha, std::size_t n);
RealRecurrence geronimus_forward(const VerblunskySeq& vs, std::size_t n);

/// Inverse Geronimus recursion seeded with alpha_{-1} = -1, alpha_{-2} = 0.
/// Reads n levels, writes alpha_0..alpha_{2n-1}. Errc::support_violation
/// (with the offending index) once an emitted coefficient leaves (-1, 1).
template <typename R>
BasicRealVerblunsky<R> geronimus_inverse(const BasicRecurrence<R>& rc, std::size_t n);

/// v_0..v_{n-1} from alpha_0..alpha_{n-1}.
template <typename R>
BasicVSeq<R> v_from_alpha(const BasicRealVerblunsky<R>& alpha, std::size_t n);

/// alpha_k = -1 + 2 v_k / (1 - alpha_{k-1}), k < n.
template <typename R>
BasicRealVerblunsky<R> alpha_from_v(const BasicVSeq<R>& v, std::size_t n);

/// Continued-fraction (LU pivot) form: v_0 = b_1 + 1,
/// v_{2k+1} = d_{k+1} / v_{2k}, v_{2k+2} = b_{k+2} + 1 - v_{2k+1}.
/// Reads n levels, writes v_0..v_{2n-1}.
template <typename R>
BasicVSeq<R> v_from_recurrence(const BasicRecurrence<R>& rc, std::size_t n);

template <typename To, typename From>
BasicRecurrence<To> precision_cast(const BasicRecurrence<From>& rc)
{
    std::vector<To> b, d;
    for (const auto& x : rc.b_values())
        b.push_back(static_cast<To>(x));
    for (const auto& x : rc.d_values())
        d.push_back(static_cast<To>(x));
    return {std::move(b), std::move(d)};
}

template <typename To, typename From>
BasicRealVerblunsky<To> precision_cast(const BasicRealVerblunsky<From>& a)
{
    std::vector<To> out;
    for (const auto& x : a.values())
        out.push_back(static_cast<To>(x));
    return BasicRealVerblunsky<To>(std::move(out));
}

template <typename To, typename From>
BasicVSeq<To> precision_cast(const BasicVSeq<From>& v)
{
    std::vector<To> out;
    for (const auto& x : v.values())
        out.push_back(static_cast<To>(x));
    return BasicVSeq<To>(std::move(out));
}

struct LuMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    double expected = 0.0;  ///< (J + I)_{row,col}
    double actual = 0.0;    ///< (L U)_{row,col}
};

struct LuReport {
    bool ok = true;
    double max_abs_diff = 0.0;
    std::optional<LuMismatch> worst;  ///< set when ok == false
};

/// Entrywise check of (J + I)_N = L_N U_N where L is unit lower bidiagonal
/// with subdiagonal v_1, v_3, ... and U is upper bidiagonal with diagonal
/// v_0, v_2, ... and unit superdiagonal.
LuReport lu_check(const RealRecurrence& rc, const VSeq& v, std::size_t order, double tol = 1e-12);

/// z = x - sqrt(x^2 - 1) on the branch |z| <= 1; on the cut (-1, 1) the
/// branch with Im z >= 0.
cplx map_x_to_z(cplx x);
/// x = (z + 1/z) / 2.
cplx map_z_to_x(cplx z);

/// |gamma_n P_n(cos t) - kappa_{2n} / sqrt(2 (1 - alpha_{2n-1}))
///     (z^{-n} Phi_{2n}(z) + z^n Phi_{2n}(1/z))|,  z = e^{it}.
double check_rel(const RealRecurrence& rc, const VerblunskySeq& vs, std::size_t n, double theta);

}  // namespace orth
