#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orth/error.hpp"
#include "orth/polyhom.hpp"
#include "orth/scalar.hpp"

namespace orth {

template <typename R>
class BasicRealVerblunsky;
using RealVerblunsky = BasicRealVerblunsky<double>;

/// Verblunsky coefficients alpha_0, alpha_1, ... with |alpha_n| < 1.
class VerblunskySeq {
public:
    VerblunskySeq() = default;
    explicit VerblunskySeq(std::vector<cplx> alpha);
    static VerblunskySeq from_real(std::span<const double> alpha);

    const cplx& operator[](std::size_t n) const;
    const std::vector<cplx>& values() const noexcept { return alpha_; }
    std::size_t size() const noexcept { return alpha_.size(); }
    void require(std::size_t n, const char* what) const;

    /// Fails with Errc::complex_alpha unless every imaginary part is exactly 0.
    RealVerblunsky real_view() const;

    friend bool operator==(const VerblunskySeq&, const VerblunskySeq&) = default;

private:
    std::vector<cplx> alpha_;
};

/// Real Verblunsky sequence, every entry in (-1, 1). This is the only input
/// the Szegő bridge accepts.
template <typename R>
class BasicRealVerblunsky {
public:
    BasicRealVerblunsky() = default;
    explicit BasicRealVerblunsky(std::vector<R> alpha) : alpha_(std::move(alpha))
    {
        for (std::size_t i = 0; i < alpha_.size(); ++i)
            if (!(alpha_[i] > R(-1) && alpha_[i] < R(1)))
                throw Error(Errc::alpha_out_of_range,
                            "alpha_" + std::to_string(i) + " outside (-1, 1)", i);
    }

    const R& operator[](std::size_t n) const
    {
        if (n >= alpha_.size())
            throw_insufficient("alpha", n + 1, alpha_.size());
        return alpha_[n];
    }

    /// alpha_j with the conventions alpha_{-1} = -1 and alpha_{-2} = 0. The
    /// second only ever appears multiplied by 1 + alpha_{-1} = 0.
    R ext(std::ptrdiff_t j) const
    {
        if (j == -1)
            return R(-1);
        if (j < -1)
            return R(0);
        return (*this)[static_cast<std::size_t>(j)];
    }

    const std::vector<R>& values() const noexcept { return alpha_; }
    std::size_t size() const noexcept { return alpha_.size(); }
    void require(std::size_t n, const char* what) const
    {
        if (alpha_.size() < n)
            throw_insufficient(what, n, alpha_.size());
    }

    friend bool operator==(const BasicRealVerblunsky&, const BasicRealVerblunsky&) = default;

private:
    std::vector<R> alpha_;
};

struct SzegoValues {
    std::vector<cplx> phi;       ///< Phi_0(z)..Phi_n(z)
    std::vector<cplx> phi_star;  ///< Phi*_0(z)..Phi*_n(z)
};

/// Szegő recursion
///   Phi_{k+1}  = z Phi_k - conj(alpha_k) Phi*_k,
///   Phi*_{k+1} = Phi*_k - alpha_k z Phi_k.
SzegoValues opuc_eval(const VerblunskySeq& vs, std::size_t n, cplx z);

/// (Phi_n, Phi*_n) in coefficient form.
std::pair<Poly, Poly> szego_polynomials(const VerblunskySeq& vs, std::size_t n);

/// Diagnostic: Phi*_n(z) == z^n conj(Phi_n(1/conj z)) to 1e-12 relative.
bool reversed_poly_check(const VerblunskySeq& vs, std::size_t n, cplx z);

/// {-alpha_n}; its Szegő polynomials are the second-kind Omega_n.
VerblunskySeq second_kind(const VerblunskySeq& vs);

/// {alpha_{n+k}}.
VerblunskySeq shift_verblunsky(const VerblunskySeq& vs, std::size_t k);

/// {xi_0, ..., xi_{k-1}, alpha_0, alpha_1, ...}.
VerblunskySeq prepend_verblunsky(const VerblunskySeq& vs, std::span<const cplx> xi);

/// kappa_n = prod_{j<n} (1 - |alpha_j|^2)^{-1/2}.
double kappa(const VerblunskySeq& vs, std::size_t n);

}  // namespace orth
