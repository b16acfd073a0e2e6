#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/szego.hpp"

namespace orth {

// Perturbation families. Each closed-form operation below has two routes:
// Path::theorem evaluates the closed form directly, Path::oracle perturbs
// the coefficients and runs the generic Geronimus map. Debug builds
// cross-check the theorem route against the oracle route.

enum class Path { theorem, oracle };

/// d_k -> lambda d_k (k >= 1, lambda > 0).
struct CoDilated {
    std::size_t k = 1;
    double lambda = 1.0;
    friend bool operator==(const CoDilated&, const CoDilated&) = default;
};

/// b_{k+1} -> b_{k+1} + tau (k >= 0).
struct CoRecursive {
    std::size_t k = 0;
    double tau = 0.0;
    friend bool operator==(const CoRecursive&, const CoRecursive&) = default;
};

/// alpha_k -> eta, |eta| < 1.
struct KModification {
    std::size_t k = 0;
    cplx eta{};
    friend bool operator==(const KModification&, const KModification&) = default;
};

/// Drop the first k levels (line) or the first k Verblunsky coefficients (circle).
struct Associated {
    std::size_t k = 0;
    friend bool operator==(const Associated&, const Associated&) = default;
};

/// Prepend k levels: (b, d) on the line, xi on the circle. Exactly one of
/// the two forms is populated.
struct AntiAssociated {
    std::vector<double> b;
    std::vector<double> d;
    std::vector<cplx> xi;

    std::size_t k() const noexcept { return xi.empty() ? b.size() : xi.size(); }
    bool on_line() const noexcept { return xi.empty(); }
    friend bool operator==(const AntiAssociated&, const AntiAssociated&) = default;
};

/// alpha^{ell}_n = alpha_{m-1} if n + 1 = m ell, else 0.
struct Sieve {
    std::size_t ell = 1;
    friend bool operator==(const Sieve&, const Sieve&) = default;
};

using PerturbationSpec = std::variant<CoDilated, CoRecursive, KModification, Associated, AntiAssociated, Sieve>;

enum class Side { line, circle };

std::string_view kind_name(const PerturbationSpec& spec);

/// Parameter-domain checks. Errc::invalid_spec for CoDilated with k = 0 or
/// lambda <= 0, Sieve with ell = 0 and malformed AntiAssociated;
/// Errc::invalid_eta for |eta| >= 1; Errc::invalid_xi for |xi| >= 1.
void validate(const PerturbationSpec& spec);

/// Whether `spec` is defined on the given side. Associated applies to both.
bool applies_to(const PerturbationSpec& spec, Side side);

// ---------------------------------------------------------------- real line

/// Co-dilated / co-recursive perturbations applied in order. Rejects any
/// other kind and two specs of the same kind at the same index.
template <typename R>
BasicRecurrence<R> coprl_apply(const BasicRecurrence<R>& rc, std::span<const PerturbationSpec> specs);

/// Single-level form: d_k -> lambda d_k (k >= 1) and b_{k+1} -> b_{k+1} + tau.
template <typename R>
BasicRecurrence<R> coprl_apply(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau);

/// Verblunsky coefficients alpha^_0..alpha^_{2n-1} of the co-dilated /
/// co-recursive family at level k. `alpha` must be the Szegő image of `rc`.
/// The theorem route shifts alpha_{2k-1} by
///   M = 4 (lambda - 1) d_k / ((1 - alpha_{2k-3})(1 - alpha_{2k-2}^2)),
/// corrects alpha_{2k} and then continues with the unperturbed (b, d) tail.
template <typename R>
BasicRealVerblunsky<R> coprl_verblunsky(const BasicRecurrence<R>& rc, const BasicRealVerblunsky<R>& alpha,
                                        std::size_t k, double lambda, double tau, std::size_t n,
                                        Path path = Path::theorem);
RealVerblunsky coprl_verblunsky(const RealRecurrence& rc, std::size_t k, double lambda, double tau,
                                std::size_t n, Path path = Path::theorem);

/// Szegő image of the associated family of order k: 2n coefficients.
template <typename R>
BasicRealVerblunsky<R> assoc_oprl_to_verblunsky(const BasicRecurrence<R>& rc, std::size_t k, std::size_t n,
                                                Path path = Path::theorem);

/// Szegő image of the anti-associated family with the prepended levels
/// (pre_b, pre_d): 2n coefficients.
template <typename R>
BasicRealVerblunsky<R> antiassoc_oprl_to_verblunsky(const BasicRecurrence<R>& rc, std::span<const R> pre_b,
                                                    std::span<const R> pre_d, std::size_t n,
                                                    Path path = Path::theorem);

// ---------------------------------------------------------- unit circle

/// beta_n = eta at n = k, alpha_n elsewhere. eta = alpha_k is allowed.
VerblunskySeq copuc_apply(const VerblunskySeq& vs, std::size_t k, cplx eta);

/// n recurrence levels of the inverse Szegő image of {alpha_{n+k}}. The
/// theorem route uses the odd / even k tables in terms of (b, d) and the
/// v-sequence of the unshifted alpha; for odd k it reads 2n + k + 1
/// coefficients, otherwise 2n + k.
template <typename R>
BasicRecurrence<R> assoc_opuc_to_recurrence(const BasicRealVerblunsky<R>& alpha, std::size_t k, std::size_t n,
                                            Path path = Path::theorem);

/// n recurrence levels of the inverse Szegő image of xi ++ alpha, xi real.
template <typename R>
BasicRecurrence<R> antiassoc_opuc_to_recurrence(const BasicRealVerblunsky<R>& alpha, std::span<const R> xi,
                                                std::size_t n, Path path = Path::theorem);

/// Sieved sequence of length ell * vs.size(); ell = 1 is the identity.
VerblunskySeq sieve(const VerblunskySeq& vs, std::size_t ell);

/// ell = 2 sieve on the line: b = 0, d_{n+1} = (1 - alpha_{n-1})(1 + alpha_n) / 4
/// with alpha_{-1} = -1. Reads alpha_0..alpha_{n-1}.
template <typename R>
BasicRecurrence<R> sieve2_recurrence(const BasicRealVerblunsky<R>& alpha, std::size_t n,
                                     Path path = Path::theorem);

/// ell = 2 sieve of the k-modified sequence: only d_{k+1} and d_{k+2} change,
/// by (1 + eta)/(1 + alpha_k) and (1 - eta)/(1 - alpha_k).
template <typename R>
BasicRecurrence<R> sieved_kmod_recurrence(const BasicRealVerblunsky<R>& alpha, std::size_t k, double eta,
                                          std::size_t n, Path path = Path::theorem);

// ------------------------------------------------------------- symmetric

/// Szegő image of the symmetric family (b = 0) with d_1..d_n:
/// gamma_{2j} = 0, gamma_{2j+1} = -1 + 4 d_{j+1} / (1 - gamma_{2j-1}).
template <typename R>
BasicRealVerblunsky<R> symmetric_verblunsky(std::span<const R> d, std::size_t n, Path path = Path::theorem);

/// Same after co-dilating d_k by lambda. Only odd entries from 2k - 1 on change.
template <typename R>
BasicRealVerblunsky<R> symmetric_codilated_verblunsky(std::span<const R> d, std::size_t k, double lambda,
                                                      std::size_t n, Path path = Path::theorem);

// ------------------------------------------------------ LU perturbations

/// Which statement of the perturbed LU data to evaluate.
///  - consistent: LU pivots of the perturbed matrix itself.
///  - stated: the closed form that keeps v_0..v_{2k-1} and
///    alpha_0..alpha_{2k-1} unchanged. It agrees with `consistent` only when
///    lambda = 1; see lu_discrepancy().
enum class LuVariant { consistent, stated };

/// v~_0..v~_{2n-1} after perturbing level k by (lambda, tau).
template <typename R>
BasicVSeq<R> perturbed_v(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau, std::size_t n,
                         LuVariant variant = LuVariant::consistent);

/// alpha^_0..alpha^_{2n-1} from the perturbed v-sequence.
template <typename R>
BasicRealVerblunsky<R> perturbed_alpha_lu(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau,
                                          std::size_t n, LuVariant variant = LuVariant::consistent);

struct LuDiscrepancyEntry {
    std::string quantity;  ///< "v" or "alpha"
    std::size_t index = 0;
    double consistent = 0.0;
    double stated = 0.0;
    double abs_diff = 0.0;
};

struct LuDiscrepancyReport {
    std::size_t k = 0;
    double lambda = 1.0;
    double tau = 0.0;
    std::vector<LuDiscrepancyEntry> entries;  ///< every index with |diff| > tol
    double max_v_diff = 0.0;
    double max_alpha_diff = 0.0;
    /// First index where the stated-formula alpha leaves (-1, 1), if any.
    std::optional<std::size_t> stated_alpha_breakdown;

    bool agrees() const noexcept { return entries.empty() && !stated_alpha_breakdown; }
};

/// Compares both LuVariant routes entry by entry.
LuDiscrepancyReport lu_discrepancy(const RealRecurrence& rc, std::size_t k, double lambda, double tau,
                                   std::size_t n, double tol = 1e-11);

}  // namespace orth
