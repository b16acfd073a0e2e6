#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/perturb.hpp"
#include "orth/polyhom.hpp"

namespace orth {

inline constexpr std::size_t kDefaultDepth = 40;
/// Minimum distance from [-1, 1] (S side) or from the unit circle (F side).
inline constexpr double kForbiddenMargin = 1e-6;

/// Stieltjes function of the measure behind `rc`, approximated by convergents.
struct SFunctionHandle {
    RealRecurrence rc;
    std::size_t depth = kDefaultDepth;
};

/// Carathéodory function of the measure behind `vs`.
struct CFunctionHandle {
    VerblunskySeq vs;
    std::size_t depth = kDefaultDepth;
};

struct Convergent {
    cplx value;
    /// Distance between the last convergent and its Aitken extrapolation
    /// from the last three convergents; falls back to the last increment.
    double error_estimate = 0.0;
};

/// P^{(1)}_{D-1}(x) / P_D(x) with D = h.depth. Needs b_1..b_D, d_1..d_{D-1}.
/// Errc::outside_domain within kForbiddenMargin of [-1, 1]; Errc::pole_hit
/// when P_D(x) vanishes.
cplx s_convergent(const SFunctionHandle& h, cplx x);
Convergent s_evaluate(const SFunctionHandle& h, cplx x);

/// Omega*_D(z) / Phi*_D(z). Needs alpha_0..alpha_{D-1}; |z| < 1 - kForbiddenMargin.
cplx f_convergent(const CFunctionHandle& h, cplx z);
Convergent f_evaluate(const CFunctionHandle& h, cplx z);

/// |F(z) - (1 - z^2) / (2z) S(x)| with z = map_x_to_z(x), S at depth `depth`
/// and F at depth 2 depth (alpha_0..alpha_{2 depth - 1}).
double fs_bridge_check(const RealRecurrence& rc, const VerblunskySeq& vs, double x,
                       std::size_t depth = kDefaultDepth);

// Transfer matrices. Each acts by homography (f = M g) and maps the
// original function to the transformed one.

/// S^{(k)} = B^{(k)} S:
/// [[P_k, -P^{(1)}_{k-1}], [d_k P_{k-1}, -d_k P^{(1)}_{k-2}]], k >= 1.
PolyMatrix2 matrix_B_assoc(const RealRecurrence& rc, std::size_t k);

/// S^{(-k)} = B^{(-k)} S with k = pre_b.size() >= 1. With P~ the polynomials
/// of the prepended recurrence and P~^{(1)} those of its first associated family,
/// [[d~_k P~^{(1)}_{k-2}, -P~^{(1)}_{k-1}], [d~_k P~_{k-1}, -P~_k]].
PolyMatrix2 matrix_B_antiassoc(const RealRecurrence& rc, std::span<const double> pre_b,
                               std::span<const double> pre_d);

/// F^{(k)} = Y^{(k)} F:
/// [[Phi_k + Phi*_k, Omega_k - Omega*_k], [Phi_k - Phi*_k, Omega_k + Omega*_k]].
PolyMatrix2 matrix_Upsilon_assoc(const VerblunskySeq& vs, std::size_t k);

/// F^{(-k)} = Y^{(-k)} F with tilde polynomials generated by xi ++ alpha:
/// [[Om~_k + Om~*_k, Om~*_k - Om~_k], [Phi~*_k - Phi~_k, Phi~_k + Phi~*_k]].
PolyMatrix2 matrix_Upsilon_antiassoc(const VerblunskySeq& vs, std::span<const cplx> xi);

using SpectralFn = std::function<cplx(cplx)>;

/// Conjugation of a homography through the Szegő map, x = (z + 1/z) / 2.
///  - Side::line: M has entries in x, `original` / `transformed` are
///    C-functions; residual |w F_t(z) - M(x) (w F(z))|, w = 2z / (1 - z^2).
///  - Side::circle: M has entries in z, `original` / `transformed` are
///    S-functions; residual |r S_t(x) - M(z) (r S(x))|, r = (1 - z^2) / (2z).
/// Requires 0 < |z| < 1.
double szego_conjugate_check(const PolyMatrix2& m, Side side, const SpectralFn& original,
                             const SpectralFn& transformed, cplx z);
double szego_conjugate_check(const PolyMatrix2& m, const CFunctionHandle& original,
                             const CFunctionHandle& transformed, cplx z);
double szego_conjugate_check(const PolyMatrix2& m, const SFunctionHandle& original,
                             const SFunctionHandle& transformed, cplx z);

// Closed forms for small orders.

/// F^{(1)}(z) = [-(1 - z^2)^2 / F(z) + (1 - z^2)(z^2 - 2 b_1 z + 1)] / (4 d_1 z^2).
cplx corollary_assoc_k1(double b1, double d1, cplx f, cplx z);

/// 1 / F~(z) = [4 d~_1 z^2 F(z) - (1 - z^2)(z^2 - 2 b~_1 z + 1)] / (-(1 - z^2)^2)
/// for one prepended level (b~_1, d~_1).
cplx corollary_antiassoc_k1(double b1_new, double d1_new, cplx f, cplx z);

/// S^{(2)} of the circle-side shift by two:
/// [[x - b_1, -1], [(l - 1)(1 - x^2), (l - 1)(x + b_1)]], l = 2 / (1 - alpha_1).
PolyMatrix2 corollary_circle_assoc_k2(const RealVerblunsky& alpha);

enum class AntiK2Form {
    corrected,  ///< [[x + b~_1, K], [x^2 - 1, K (x - b~_1)]]
    verbatim,   ///< [[K (x - b~_1), 1], [K (x^2 - 1), x + b~_1]]
};

/// S^{(-2)} after prepending (xi_0, xi_1); b~_1 = xi_0, K = (1 - xi_1) / (1 + xi_1).
/// The verbatim form only agrees with the corrected one when xi_0 = xi_1 = 0.
PolyMatrix2 corollary_circle_antiassoc_k2(double xi0, double xi1, AntiK2Form form = AntiK2Form::corrected);

struct FixtureRow {
    cplx point;
    cplx lhs;
    cplx rhs;
    double residual = 0.0;
};

struct Fixture {
    std::string name;
    std::string description;
    /// Whether lhs == rhs is expected. The verbatim anti-associated k = 2
    /// form is kept as a counterexample.
    bool expect_agreement = true;
    std::function<std::vector<FixtureRow>(std::size_t depth)> rows;
};

/// Named closed-form fixtures on Chebyshev data, each evaluated against
/// independent convergents of the transformed family.
std::vector<Fixture> corollary_fixtures();

}  // namespace orth
