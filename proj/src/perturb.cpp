#include "orth/perturb.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "orth/compare.hpp"

namespace orth {

namespace {

template <typename R>
void check_support(const R& a, std::size_t index)
{
    using std::abs;
    if (!(abs(a) < R(1) - R(kSupportTol)))
        throw Error(Errc::support_violation,
                    "alpha_" + std::to_string(index) + " = " + std::to_string(static_cast<double>(a)) +
                        " leaves (-1, 1)",
                    index);
}

/// alpha_j over a growing vector with alpha_{-1} = -1, alpha_{-2} = 0.
template <typename R>
R ext(const std::vector<R>& a, std::ptrdiff_t j)
{
    if (j == -1)
        return R(-1);
    if (j < -1)
        return R(0);
    return a.at(static_cast<std::size_t>(j));
}

template <typename T, typename Oracle>
void debug_cross_check([[maybe_unused]] const T& theorem, [[maybe_unused]] Oracle&& oracle,
                       [[maybe_unused]] const char* what)
{
#ifndef NDEBUG
    T reference;
    try {
        reference = oracle();
    }
    catch (const Error&) {
        return;
    }
    const double dev = max_scaled_diff(theorem, reference);
    if (!(dev <= 1e-6))
        throw std::logic_error(std::string(what) + ": theorem route deviates from oracle by " +
                               std::to_string(dev));
#endif
}

template <typename R>
std::vector<R> real_xi(std::span<const R> xi)
{
    std::vector<R> out(xi.begin(), xi.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!(out[i] > R(-1) && out[i] < R(1)))
            throw Error(Errc::invalid_xi, "xi_" + std::to_string(i) + " outside (-1, 1)", i);
    return out;
}

template <typename R>
void check_lambda(std::size_t k, double lambda)
{
    if (!(lambda > 0.0))
        throw Error(Errc::invalid_spec, "co-dilation factor must be positive");
    if (k == 0 && lambda != 1.0)
        throw Error(Errc::invalid_spec, "co-dilation at k = 0 multiplies d_0 and has no effect");
}

}  // namespace

std::string_view kind_name(const PerturbationSpec& spec)
{
    struct Visitor {
        std::string_view operator()(const CoDilated&) const { return "co_dilated"; }
        std::string_view operator()(const CoRecursive&) const { return "co_recursive"; }
        std::string_view operator()(const KModification&) const { return "k_modification"; }
        std::string_view operator()(const Associated&) const { return "associated"; }
        std::string_view operator()(const AntiAssociated&) const { return "anti_associated"; }
        std::string_view operator()(const Sieve&) const { return "sieve"; }
    };
    return std::visit(Visitor{}, spec);
}

void validate(const PerturbationSpec& spec)
{
    struct Visitor {
        void operator()(const CoDilated& s) const
        {
            if (s.k == 0)
                throw Error(Errc::invalid_spec, "co_dilated requires k >= 1");
            if (!(s.lambda > 0.0))
                throw Error(Errc::invalid_spec, "co_dilated requires lambda > 0");
        }
        void operator()(const CoRecursive& s) const
        {
            if (!std::isfinite(s.tau))
                throw Error(Errc::invalid_spec, "co_recursive requires a finite tau");
        }
        void operator()(const KModification& s) const
        {
            if (!(std::abs(s.eta) < 1.0))
                throw Error(Errc::invalid_eta, "k_modification requires |eta| < 1");
        }
        void operator()(const Associated&) const {}
        void operator()(const AntiAssociated& s) const
        {
            if (!s.xi.empty() && (!s.b.empty() || !s.d.empty()))
                throw Error(Errc::invalid_spec, "anti_associated takes either (b, d) or xi, not both");
            if (s.b.size() != s.d.size())
                throw Error(Errc::invalid_spec, "anti_associated b and d lists differ in length");
            for (std::size_t i = 0; i < s.d.size(); ++i)
                if (!(s.d[i] > 0.0))
                    throw Error(Errc::invalid_prepend, "prepended d must be positive", i + 1);
            for (std::size_t i = 0; i < s.xi.size(); ++i)
                if (!(std::abs(s.xi[i]) < 1.0))
                    throw Error(Errc::invalid_xi, "prepended xi must satisfy |xi| < 1", i);
        }
        void operator()(const Sieve& s) const
        {
            if (s.ell == 0)
                throw Error(Errc::invalid_spec, "sieve requires ell >= 1");
        }
    };
    std::visit(Visitor{}, spec);
}

bool applies_to(const PerturbationSpec& spec, Side side)
{
    if (std::holds_alternative<Associated>(spec))
        return true;
    if (const auto* anti = std::get_if<AntiAssociated>(&spec))
        return anti->on_line() == (side == Side::line);
    const bool line_kind = std::holds_alternative<CoDilated>(spec) || std::holds_alternative<CoRecursive>(spec);
    return line_kind == (side == Side::line);
}

// ---------------------------------------------------------------- real line

template <typename R>
BasicRecurrence<R> coprl_apply(const BasicRecurrence<R>& rc, std::span<const PerturbationSpec> specs)
{
    std::vector<R> b = rc.b_values();
    std::vector<R> d = rc.d_values();
    std::set<std::pair<int, std::size_t>> seen;
    for (const auto& spec : specs) {
        validate(spec);
        if (const auto* dil = std::get_if<CoDilated>(&spec)) {
            if (!seen.insert({0, dil->k}).second)
                throw Error(Errc::invalid_spec, "two co_dilated specs at k = " + std::to_string(dil->k));
            if (dil->k > d.size())
                throw_insufficient("coprl_apply (d)", dil->k, d.size());
            d[dil->k - 1] *= R(dil->lambda);
        }
        else if (const auto* rec = std::get_if<CoRecursive>(&spec)) {
            if (!seen.insert({1, rec->k}).second)
                throw Error(Errc::invalid_spec, "two co_recursive specs at k = " + std::to_string(rec->k));
            if (rec->k + 1 > b.size())
                throw_insufficient("coprl_apply (b)", rec->k + 1, b.size());
            b[rec->k] += R(rec->tau);
        }
        else {
            throw Error(Errc::invalid_spec,
                        std::string(kind_name(spec)) + " is not a co-dilated or co-recursive perturbation");
        }
    }
    return {std::move(b), std::move(d)};
}

template <typename R>
BasicRecurrence<R> coprl_apply(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau)
{
    check_lambda<R>(k, lambda);
    std::vector<PerturbationSpec> specs;
    if (lambda != 1.0)
        specs.emplace_back(CoDilated{k, lambda});
    specs.emplace_back(CoRecursive{k, tau});
    return coprl_apply(rc, std::span<const PerturbationSpec>(specs));
}

template <typename R>
BasicRealVerblunsky<R> coprl_verblunsky(const BasicRecurrence<R>& rc, const BasicRealVerblunsky<R>& alpha,
                                        std::size_t k, double lambda, double tau, std::size_t n, Path path)
{
    check_lambda<R>(k, lambda);
    if (n < k + 1)
        throw_insufficient("coprl_verblunsky (levels)", k + 1, n);
    auto oracle = [&] { return geronimus_inverse(coprl_apply(rc, k, lambda, tau), n); };
    if (path == Path::oracle)
        return oracle();

    rc.require(n, n, "coprl_verblunsky");
    alpha.require(2 * k + 1, "coprl_verblunsky");
    const auto& a = alpha.values();
    const auto kk = static_cast<std::ptrdiff_t>(k);
    const R lam(lambda);
    const R t(tau);
    const R shift = k == 0 ? R(0)
                           : R(4) * (lam - R(1)) * rc.d(k) /
                                 ((R(1) - ext(a, 2 * kk - 3)) * (R(1) - ext(a, 2 * kk - 2) * ext(a, 2 * kk - 2)));

    std::vector<R> out;
    out.reserve(2 * n);
    for (std::ptrdiff_t j = 0; j < 2 * kk - 1; ++j)
        out.push_back(a[static_cast<std::size_t>(j)]);
    if (k >= 1) {
        out.push_back(a[2 * k - 1] + shift);
        check_support(out.back(), 2 * k - 1);
    }
    const R odd_prev = ext(a, 2 * kk - 1);
    out.push_back(((R(1) - odd_prev) * a[2 * k] + R(2) * t + shift * ext(a, 2 * kk - 2)) /
                  (R(1) - odd_prev - shift));
    check_support(out.back(), 2 * k);
    for (std::size_t m = k; m < n; ++m) {
        const auto i = static_cast<std::ptrdiff_t>(2 * m);
        const R prev = ext(out, i - 1);
        const R even = out[2 * m];
        out.push_back(R(-1) + R(4) * rc.d(m + 1) / ((R(1) - prev) * (R(1) - even * even)));
        check_support(out.back(), 2 * m + 1);
        if (m + 1 < n) {
            const R odd = out[2 * m + 1];
            out.push_back((R(2) * rc.b(m + 2) + (R(1) + odd) * even) / (R(1) - odd));
            check_support(out.back(), 2 * m + 2);
        }
    }
    BasicRealVerblunsky<R> result(std::move(out));
    debug_cross_check(result, oracle, "coprl_verblunsky");
    return result;
}

RealVerblunsky coprl_verblunsky(const RealRecurrence& rc, std::size_t k, double lambda, double tau,
                                std::size_t n, Path path)
{
    return coprl_verblunsky(rc, geronimus_inverse(rc, n), k, lambda, tau, n, path);
}

template <typename R>
BasicRealVerblunsky<R> assoc_oprl_to_verblunsky(const BasicRecurrence<R>& rc, std::size_t k, std::size_t n,
                                                Path path)
{
    auto oracle = [&] { return geronimus_inverse(shift_coefficients(rc, k), n); };
    if (path == Path::oracle)
        return oracle();
    rc.require(n + k, n + k, "assoc_oprl_to_verblunsky");
    std::vector<R> a;
    a.reserve(2 * n);
    if (n > 0) {
        a.push_back(rc.b(k + 1));
        check_support(a[0], 0);
        a.push_back(R(-1) + R(2) * rc.d(k + 1) / (R(1) - a[0] * a[0]));
        check_support(a[1], 1);
    }
    for (std::size_t m = 1; m < n; ++m) {
        const R odd_prev = a[2 * m - 1];
        a.push_back((R(2) * rc.b(m + k + 1) + (R(1) + odd_prev) * a[2 * m - 2]) / (R(1) - odd_prev));
        check_support(a.back(), 2 * m);
        const R even = a.back();
        a.push_back(R(-1) + R(4) * rc.d(m + k + 1) / ((R(1) - odd_prev) * (R(1) - even * even)));
        check_support(a.back(), 2 * m + 1);
    }
    BasicRealVerblunsky<R> result(std::move(a));
    debug_cross_check(result, oracle, "assoc_oprl_to_verblunsky");
    return result;
}

template <typename R>
BasicRealVerblunsky<R> antiassoc_oprl_to_verblunsky(const BasicRecurrence<R>& rc, std::span<const R> pre_b,
                                                    std::span<const R> pre_d, std::size_t n, Path path)
{
    if (pre_b.size() != pre_d.size())
        throw Error(Errc::invalid_prepend, "prepended b and d lists differ in length");
    for (std::size_t i = 0; i < pre_d.size(); ++i)
        if (!(pre_d[i] > R(0)))
            throw Error(Errc::invalid_prepend, "prepended d_" + std::to_string(i + 1) + " must be positive", i + 1);
    auto oracle = [&] { return geronimus_inverse(prepend_coefficients(rc, pre_b, pre_d), n); };
    if (path == Path::oracle)
        return oracle();

    const std::size_t k = pre_b.size();
    if (n > k)
        rc.require(n - k, n - k, "antiassoc_oprl_to_verblunsky");
    // b~_j = b_{j-k}, d~_j = d_{j-k}, the first k of each taken from the prepended window.
    auto bt = [&](std::size_t j) { return j <= k ? pre_b[j - 1] : rc.b(j - k); };
    auto dt = [&](std::size_t j) { return j <= k ? pre_d[j - 1] : rc.d(j - k); };
    std::vector<R> a;
    a.reserve(2 * n);
    if (n > 0) {
        a.push_back(bt(1));
        check_support(a[0], 0);
        a.push_back(R(-1) + R(2) * dt(1) / (R(1) - a[0] * a[0]));
        check_support(a[1], 1);
    }
    for (std::size_t m = 1; m < n; ++m) {
        const R odd_prev = a[2 * m - 1];
        a.push_back((R(2) * bt(m + 1) + (R(1) + odd_prev) * a[2 * m - 2]) / (R(1) - odd_prev));
        check_support(a.back(), 2 * m);
        const R even = a.back();
        a.push_back(R(-1) + R(4) * dt(m + 1) / ((R(1) - odd_prev) * (R(1) - even * even)));
        check_support(a.back(), 2 * m + 1);
    }
    BasicRealVerblunsky<R> result(std::move(a));
    debug_cross_check(result, oracle, "antiassoc_oprl_to_verblunsky");
    return result;
}

// ---------------------------------------------------------- unit circle

VerblunskySeq copuc_apply(const VerblunskySeq& vs, std::size_t k, cplx eta)
{
    if (!(std::abs(eta) < 1.0))
        throw Error(Errc::invalid_eta, "|eta| must be < 1");
    vs.require(k + 1, "copuc_apply");
    std::vector<cplx> beta = vs.values();
    beta[k] = eta;
    return VerblunskySeq(std::move(beta));
}

template <typename R>
BasicRecurrence<R> assoc_opuc_to_recurrence(const BasicRealVerblunsky<R>& alpha, std::size_t k, std::size_t n,
                                            Path path)
{
    auto oracle = [&] {
        alpha.require(2 * n + k, "assoc_opuc_to_recurrence");
        const auto& a = alpha.values();
        return geronimus_forward(BasicRealVerblunsky<R>(std::vector<R>(a.begin() + static_cast<std::ptrdiff_t>(k), a.end())), n);
    };
    if (path == Path::oracle)
        return oracle();
    if (n == 0)
        return {};

    std::vector<R> b, d;
    b.reserve(n);
    d.reserve(n);
    if (k % 2 == 1) {
        const std::size_t m = (k + 1) / 2;
        alpha.require(2 * n + k + 1, "assoc_opuc_to_recurrence");
        const BasicRecurrence<R> base = geronimus_forward(alpha, n + m);
        const BasicVSeq<R> v = v_from_alpha(alpha, 2 * n + k + 1);
        const R a_k = alpha[2 * m - 1];
        d.push_back((R(1) + a_k) / v[2 * m + 1] * base.d(m + 1));
        b.push_back(a_k);
        for (std::size_t j = 1; j < n; ++j) {
            const std::size_t level = j + m;
            d.push_back(v[2 * level - 1] / v[2 * level + 1] * base.d(level + 1));
            b.push_back(base.b(level + 1) + v[2 * level - 2] - v[2 * level]);
        }
    }
    else {
        const std::size_t m = k / 2;
        alpha.require(2 * n + k, "assoc_opuc_to_recurrence");
        const BasicRecurrence<R> base = geronimus_forward(alpha, n + m);
        const R lambda = R(2) / (R(1) - alpha.ext(static_cast<std::ptrdiff_t>(2 * m) - 1));
        d.push_back(lambda * base.d(m + 1));
        b.push_back(alpha[2 * m]);
        for (std::size_t j = 1; j < n; ++j) {
            d.push_back(base.d(j + m + 1));
            b.push_back(base.b(j + m + 1));
        }
    }
    BasicRecurrence<R> result(std::move(b), std::move(d));
    debug_cross_check(result, oracle, "assoc_opuc_to_recurrence");
    return result;
}

template <typename R>
BasicRecurrence<R> antiassoc_opuc_to_recurrence(const BasicRealVerblunsky<R>& alpha, std::span<const R> xi_in,
                                                std::size_t n, Path path)
{
    const std::vector<R> xi = real_xi(xi_in);
    const std::size_t k = xi.size();
    auto oracle = [&] {
        std::vector<R> joined = xi;
        joined.insert(joined.end(), alpha.values().begin(), alpha.values().end());
        return geronimus_forward(BasicRealVerblunsky<R>(std::move(joined)), n);
    };
    if (path == Path::oracle || k == 0)
        return oracle();
    if (2 * n > k)
        alpha.require(2 * n - k, "antiassoc_opuc_to_recurrence");

    // xi_j with xi_{-1} = -1.
    auto x = [&](std::ptrdiff_t j) { return j == -1 ? R(-1) : xi.at(static_cast<std::size_t>(j)); };
    auto a = [&](std::ptrdiff_t j) { return alpha.ext(j); };
    const R quarter(0.25);
    const R half(0.5);

    std::vector<R> b, d;
    b.reserve(n);
    d.reserve(n);
    if (k % 2 == 1) {
        const auto m = static_cast<std::ptrdiff_t>((k + 1) / 2);
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
            // The boundary row j = m - 1 also covers j = 0 when k = 1 (there is no xi_1).
            if (j == m - 1)
                d.push_back(quarter * (R(1) - x(2 * j - 1)) * (R(1) - x(2 * j) * x(2 * j)) * (R(1) + a(0)));
            else if (j == 0)
                d.push_back(half * (R(1) - x(0) * x(0)) * (R(1) + x(1)));
            else if (j <= m - 2)
                d.push_back(quarter * (R(1) - x(2 * j - 1)) * (R(1) - x(2 * j) * x(2 * j)) * (R(1) + x(2 * j + 1)));
            else {
                const std::ptrdiff_t s = 2 * (j - m);
                d.push_back(quarter * (R(1) - a(s)) * (R(1) - a(s + 1) * a(s + 1)) * (R(1) + a(s + 2)));
            }

            if (j == 0)
                b.push_back(x(0));
            else if (j <= m - 1)
                b.push_back(half * ((R(1) - x(2 * j - 1)) * x(2 * j) - (R(1) + x(2 * j - 1)) * x(2 * j - 2)));
            else if (j == m)
                b.push_back(half * ((R(1) - a(0)) * a(1) - (R(1) + a(0)) * x(2 * m - 2)));
            else {
                const std::ptrdiff_t s = 2 * (j - m);
                b.push_back(half * ((R(1) - a(s)) * a(s + 1) - (R(1) + a(s)) * a(s - 1)));
            }
        }
    }
    else {
        const auto m = static_cast<std::ptrdiff_t>(k / 2);
        const std::size_t tail = n > static_cast<std::size_t>(m) ? n - static_cast<std::size_t>(m) : 0;
        const BasicRecurrence<R> base = geronimus_forward(alpha, tail);
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
            const auto ju = static_cast<std::size_t>(j);
            if (j == 0)
                d.push_back(half * (R(1) - x(0) * x(0)) * (R(1) + x(1)));
            else if (j <= m - 1)
                d.push_back(quarter * (R(1) - x(2 * j - 1)) * (R(1) - x(2 * j) * x(2 * j)) * (R(1) + x(2 * j + 1)));
            else if (j == m)
                d.push_back(quarter * (R(1) - x(2 * j - 1)) * (R(1) - a(0) * a(0)) * (R(1) + a(1)));
            else
                d.push_back(base.d(ju - static_cast<std::size_t>(m) + 1));

            if (j == 0)
                b.push_back(x(0));
            else if (j <= m - 1)
                b.push_back(half * ((R(1) - x(2 * j - 1)) * x(2 * j) - (R(1) + x(2 * j - 1)) * x(2 * j - 2)));
            else if (j == m)
                b.push_back(half * ((R(1) - x(2 * j - 1)) * a(0) - (R(1) + x(2 * j - 1)) * x(2 * j - 2)));
            else
                b.push_back(base.b(ju - static_cast<std::size_t>(m) + 1));
        }
    }
    BasicRecurrence<R> result(std::move(b), std::move(d));
    debug_cross_check(result, oracle, "antiassoc_opuc_to_recurrence");
    return result;
}

VerblunskySeq sieve(const VerblunskySeq& vs, std::size_t ell)
{
    if (ell == 0)
        throw Error(Errc::invalid_spec, "sieve requires ell >= 1");
    std::vector<cplx> out(ell * vs.size());
    for (std::size_t n = 0; n < out.size(); ++n)
        if ((n + 1) % ell == 0)
            out[n] = vs[(n + 1) / ell - 1];
    return VerblunskySeq(std::move(out));
}

namespace {

template <typename R>
BasicRealVerblunsky<R> sieve2_real(const std::vector<R>& a)
{
    std::vector<R> out(2 * a.size(), R(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[2 * i + 1] = a[i];
    return BasicRealVerblunsky<R>(std::move(out));
}

}  // namespace

template <typename R>
BasicRecurrence<R> sieve2_recurrence(const BasicRealVerblunsky<R>& alpha, std::size_t n, Path path)
{
    alpha.require(n, "sieve2_recurrence");
    auto oracle = [&] { return geronimus_forward(sieve2_real(alpha.values()), n); };
    if (path == Path::oracle)
        return oracle();
    std::vector<R> b(n, R(0));
    std::vector<R> d;
    d.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto i = static_cast<std::ptrdiff_t>(j);
        d.push_back((R(1) - alpha.ext(i - 1)) * (R(1) + alpha.ext(i)) / R(4));
    }
    BasicRecurrence<R> result(std::move(b), std::move(d));
    debug_cross_check(result, oracle, "sieve2_recurrence");
    return result;
}

template <typename R>
BasicRecurrence<R> sieved_kmod_recurrence(const BasicRealVerblunsky<R>& alpha, std::size_t k, double eta,
                                          std::size_t n, Path path)
{
    if (!(eta > -1.0 && eta < 1.0))
        throw Error(Errc::invalid_eta, "eta must lie in (-1, 1)");
    alpha.require(std::max(n, k + 1), "sieved_kmod_recurrence");
    const R e(eta);
    auto oracle = [&] {
        std::vector<R> beta = alpha.values();
        beta[k] = e;
        return geronimus_forward(sieve2_real(beta), n);
    };
    if (path == Path::oracle)
        return oracle();
    const BasicRecurrence<R> base = sieve2_recurrence(alpha, n, Path::theorem);
    std::vector<R> d = base.d_values();
    if (k < n)
        d[k] *= (R(1) + e) / (R(1) + alpha[k]);
    if (k + 1 < n)
        d[k + 1] *= (R(1) - e) / (R(1) - alpha[k]);
    BasicRecurrence<R> result(base.b_values(), std::move(d));
    debug_cross_check(result, oracle, "sieved_kmod_recurrence");
    return result;
}

// ------------------------------------------------------------- symmetric

template <typename R>
BasicRealVerblunsky<R> symmetric_verblunsky(std::span<const R> d, std::size_t n, Path path)
{
    if (d.size() < n)
        throw_insufficient("symmetric_verblunsky", n, d.size());
    auto oracle = [&] {
        return geronimus_inverse(BasicRecurrence<R>(std::vector<R>(n, R(0)), std::vector<R>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n))), n);
    };
    if (path == Path::oracle)
        return oracle();
    std::vector<R> g;
    g.reserve(2 * n);
    R odd_prev(-1);
    for (std::size_t j = 0; j < n; ++j) {
        g.push_back(R(0));
        const R odd = R(-1) + R(4) * d[j] / (R(1) - odd_prev);
        check_support(odd, 2 * j + 1);
        g.push_back(odd);
        odd_prev = odd;
    }
    BasicRealVerblunsky<R> result(std::move(g));
    debug_cross_check(result, oracle, "symmetric_verblunsky");
    return result;
}

template <typename R>
BasicRealVerblunsky<R> symmetric_codilated_verblunsky(std::span<const R> d, std::size_t k, double lambda,
                                                      std::size_t n, Path path)
{
    if (k == 0)
        throw Error(Errc::invalid_spec, "co-dilation requires k >= 1");
    if (!(lambda > 0.0))
        throw Error(Errc::invalid_spec, "co-dilation factor must be positive");
    if (n < k)
        throw_insufficient("symmetric_codilated_verblunsky (levels)", k, n);
    if (d.size() < n)
        throw_insufficient("symmetric_codilated_verblunsky", n, d.size());
    auto oracle = [&] {
        std::vector<R> dd(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n));
        dd[k - 1] *= R(lambda);
        return symmetric_verblunsky(std::span<const R>(dd), n, Path::oracle);
    };
    if (path == Path::oracle)
        return oracle();

    const BasicRealVerblunsky<R> base = symmetric_verblunsky(d, k, Path::theorem);
    std::vector<R> g(base.values().begin(), base.values().begin() + static_cast<std::ptrdiff_t>(2 * k - 1));
    const R before = ext(g, static_cast<std::ptrdiff_t>(2 * k) - 3);
    const R odd = base[2 * k - 1] + R(4) * (R(lambda) - R(1)) * d[k - 1] / (R(1) - before);
    check_support(odd, 2 * k - 1);
    g.push_back(odd);
    R odd_prev = odd;
    for (std::size_t j = k; j < n; ++j) {
        g.push_back(R(0));
        const R next = R(-1) + R(4) * d[j] / (R(1) - odd_prev);
        check_support(next, 2 * j + 1);
        g.push_back(next);
        odd_prev = next;
    }
    BasicRealVerblunsky<R> result(std::move(g));
    debug_cross_check(result, oracle, "symmetric_codilated_verblunsky");
    return result;
}

// ------------------------------------------------------ LU perturbations

namespace {

template <typename R>
std::vector<R> stated_v(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau, std::size_t n)
{
    const BasicVSeq<R> v = v_from_recurrence(rc, n);
    std::vector<R> out(v.values().begin(), v.values().begin() + static_cast<std::ptrdiff_t>(2 * k));
    out.push_back(v[2 * k] + (R(1) - R(lambda)) * v.ext(static_cast<std::ptrdiff_t>(2 * k) - 1) + R(tau));
    for (std::size_t m = k; m < n; ++m) {
        out.push_back(rc.d(m + 1) / out[2 * m]);
        if (m + 1 < n)
            out.push_back(rc.b(m + 2) + R(1) - out[2 * m + 1]);
    }
    return out;
}

/// Stated-formula alpha without support checks, for diagnostics.
template <typename R>
std::vector<R> stated_alpha_unchecked(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau,
                                     std::size_t n)
{
    const BasicRealVerblunsky<R> alpha = geronimus_inverse(rc, n);
    const BasicVSeq<R> v = v_from_recurrence(rc, n);
    const std::vector<R> vt = stated_v(rc, k, lambda, tau, n);
    const auto kk = static_cast<std::ptrdiff_t>(k);
    std::vector<R> out(alpha.values().begin(), alpha.values().begin() + 2 * kk);
    out.push_back(alpha[2 * k] + R(2) * ((R(1) - R(lambda)) * v.ext(2 * kk - 1) + R(tau)) /
                                     (R(1) - alpha.ext(2 * kk - 1)));
    for (std::size_t j = 2 * k + 1; j < 2 * n; ++j)
        out.push_back(R(-1) + R(2) * vt[j] / (R(1) - out[j - 1]));
    return out;
}

}  // namespace

template <typename R>
BasicVSeq<R> perturbed_v(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau, std::size_t n,
                         LuVariant variant)
{
    check_lambda<R>(k, lambda);
    if (n < k + 1)
        throw_insufficient("perturbed_v (levels)", k + 1, n);
    if (variant == LuVariant::consistent)
        return v_from_recurrence(coprl_apply(rc, k, lambda, tau), n);
    return BasicVSeq<R>(stated_v(rc, k, lambda, tau, n));
}

template <typename R>
BasicRealVerblunsky<R> perturbed_alpha_lu(const BasicRecurrence<R>& rc, std::size_t k, double lambda, double tau,
                                          std::size_t n, LuVariant variant)
{
    check_lambda<R>(k, lambda);
    if (n < k + 1)
        throw_insufficient("perturbed_alpha_lu (levels)", k + 1, n);
    if (variant == LuVariant::consistent)
        return alpha_from_v(perturbed_v(rc, k, lambda, tau, n, variant), 2 * n);
    std::vector<R> a = stated_alpha_unchecked(rc, k, lambda, tau, n);
    for (std::size_t j = 0; j < a.size(); ++j)
        check_support(a[j], j);
    return BasicRealVerblunsky<R>(std::move(a));
}

LuDiscrepancyReport lu_discrepancy(const RealRecurrence& rc, std::size_t k, double lambda, double tau,
                                   std::size_t n, double tol)
{
    LuDiscrepancyReport report;
    report.k = k;
    report.lambda = lambda;
    report.tau = tau;

    const VSeq v_ok = perturbed_v(rc, k, lambda, tau, n, LuVariant::consistent);
    const VSeq v_stated = perturbed_v(rc, k, lambda, tau, n, LuVariant::stated);
    for (std::size_t j = 0; j < v_ok.size(); ++j) {
        const double diff = std::abs(v_ok[j] - v_stated[j]);
        report.max_v_diff = std::max(report.max_v_diff, diff);
        if (diff > tol)
            report.entries.push_back({"v", j, v_ok[j], v_stated[j], diff});
    }

    const RealVerblunsky a_ok = perturbed_alpha_lu(rc, k, lambda, tau, n, LuVariant::consistent);
    const std::vector<double> a_stated = stated_alpha_unchecked(rc, k, lambda, tau, n);
    for (std::size_t j = 0; j < a_stated.size(); ++j) {
        if (!(std::abs(a_stated[j]) < 1.0 - kSupportTol)) {
            report.stated_alpha_breakdown = j;
            report.entries.push_back({"alpha", j, a_ok[j], a_stated[j], std::abs(a_ok[j] - a_stated[j])});
            break;
        }
        const double diff = std::abs(a_ok[j] - a_stated[j]);
        report.max_alpha_diff = std::max(report.max_alpha_diff, diff);
        if (diff > tol)
            report.entries.push_back({"alpha", j, a_ok[j], a_stated[j], diff});
    }
    return report;
}

#define ORTH_INSTANTIATE_PERTURB(R)                                                                            \
    template BasicRecurrence<R> coprl_apply<R>(const BasicRecurrence<R>&, std::span<const PerturbationSpec>);   \
    template BasicRecurrence<R> coprl_apply<R>(const BasicRecurrence<R>&, std::size_t, double, double);         \
    template BasicRealVerblunsky<R> coprl_verblunsky<R>(const BasicRecurrence<R>&, const BasicRealVerblunsky<R>&, \
                                                        std::size_t, double, double, std::size_t, Path);       \
    template BasicRealVerblunsky<R> assoc_oprl_to_verblunsky<R>(const BasicRecurrence<R>&, std::size_t,         \
                                                                std::size_t, Path);                            \
    template BasicRealVerblunsky<R> antiassoc_oprl_to_verblunsky<R>(                                           \
        const BasicRecurrence<R>&, std::span<const R>, std::span<const R>, std::size_t, Path);                 \
    template BasicRecurrence<R> assoc_opuc_to_recurrence<R>(const BasicRealVerblunsky<R>&, std::size_t,         \
                                                            std::size_t, Path);                                \
    template BasicRecurrence<R> antiassoc_opuc_to_recurrence<R>(const BasicRealVerblunsky<R>&,                 \
                                                                std::span<const R>, std::size_t, Path);        \
    template BasicRecurrence<R> sieve2_recurrence<R>(const BasicRealVerblunsky<R>&, std::size_t, Path);         \
    template BasicRecurrence<R> sieved_kmod_recurrence<R>(const BasicRealVerblunsky<R>&, std::size_t, double,   \
                                                          std::size_t, Path);                                  \
    template BasicRealVerblunsky<R> symmetric_verblunsky<R>(std::span<const R>, std::size_t, Path);             \
    template BasicRealVerblunsky<R> symmetric_codilated_verblunsky<R>(std::span<const R>, std::size_t, double,  \
                                                                      std::size_t, Path);                      \
    template BasicVSeq<R> perturbed_v<R>(const BasicRecurrence<R>&, std::size_t, double, double, std::size_t,   \
                                         LuVariant);                                                           \
    template BasicRealVerblunsky<R> perturbed_alpha_lu<R>(const BasicRecurrence<R>&, std::size_t, double,       \
                                                          double, std::size_t, LuVariant);

ORTH_INSTANTIATE_PERTURB(double)
ORTH_INSTANTIATE_PERTURB(extended)

#undef ORTH_INSTANTIATE_PERTURB

}  // namespace orth
