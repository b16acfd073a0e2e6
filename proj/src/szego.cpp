#include "orth/szego.hpp"

#include <cmath>
#include <string>

namespace orth {

namespace {

template <typename R>
void check_support(const R& a, std::size_t index)
{
    using std::abs;
    if (!(abs(a) < R(1) - R(kSupportTol)))
        throw Error(Errc::support_violation,
                    "alpha_" + std::to_string(index) + " = " + std::to_string(static_cast<double>(a)) +
                        " leaves (-1, 1): measure not supported in [-1, 1]",
                    index);
}

template <typename R>
R checked_div(const R& num, const R& den, const char* what)
{
    if (den == R(0))
        throw Error(Errc::division_degenerate, std::string(what) + ": zero denominator");
    return num / den;
}

}  // namespace

template <typename R>
BasicRecurrence<R> geronimus_forward(const BasicRealVerblunsky<R>& alpha, std::size_t n)
{
    alpha.require(2 * n, "geronimus_forward");
    std::vector<R> b, d;
    b.reserve(n);
    d.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const auto i = static_cast<std::ptrdiff_t>(2 * m);
        const R prev = alpha.ext(i - 1);
        const R cur = alpha.ext(i);
        d.push_back((R(1) - prev) * (R(1) - cur * cur) * (R(1) + alpha.ext(i + 1)) / R(4));
        b.push_back((cur * (R(1) - prev) - alpha.ext(i - 2) * (R(1) + prev)) / R(2));
    }
    return {std::move(b), std::move(d)};
}

RealRecurrence geronimus_forward(const VerblunskySeq& vs, std::size_t n)
{
    return geronimus_forward(vs.real_view(), n);
}

template <typename R>
BasicRealVerblunsky<R> geronimus_inverse(const BasicRecurrence<R>& rc, std::size_t n)
{
    rc.require(n, n, "geronimus_inverse");
    std::vector<R> a;
    a.reserve(2 * n);
    auto ext = [&a](std::ptrdiff_t j) {
        if (j == -1)
            return R(-1);
        if (j < -1)
            return R(0);
        return a[static_cast<std::size_t>(j)];
    };
    for (std::size_t m = 0; m < n; ++m) {
        const auto i = static_cast<std::ptrdiff_t>(2 * m);
        const R odd_prev = ext(i - 1);
        const R even = checked_div(R(2) * rc.b(m + 1) + (R(1) + odd_prev) * ext(i - 2), R(1) - odd_prev,
                                   "geronimus_inverse");
        check_support(even, 2 * m);
        a.push_back(even);
        const R odd = R(-1) + checked_div(R(4) * rc.d(m + 1), (R(1) - odd_prev) * (R(1) - even * even),
                                          "geronimus_inverse");
        check_support(odd, 2 * m + 1);
        a.push_back(odd);
    }
    return BasicRealVerblunsky<R>(std::move(a));
}

template <typename R>
BasicVSeq<R> v_from_alpha(const BasicRealVerblunsky<R>& alpha, std::size_t n)
{
    alpha.require(n, "v_from_alpha");
    std::vector<R> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto i = static_cast<std::ptrdiff_t>(k);
        v.push_back((R(1) + alpha.ext(i)) * (R(1) - alpha.ext(i - 1)) / R(2));
    }
    return BasicVSeq<R>(std::move(v));
}

template <typename R>
BasicRealVerblunsky<R> alpha_from_v(const BasicVSeq<R>& v, std::size_t n)
{
    if (v.size() < n)
        throw_insufficient("alpha_from_v", n, v.size());
    std::vector<R> a;
    a.reserve(n);
    R prev(-1);
    for (std::size_t k = 0; k < n; ++k) {
        const R next = R(-1) + checked_div(R(2) * v[k], R(1) - prev, "alpha_from_v");
        check_support(next, k);
        a.push_back(next);
        prev = next;
    }
    return BasicRealVerblunsky<R>(std::move(a));
}

template <typename R>
BasicVSeq<R> v_from_recurrence(const BasicRecurrence<R>& rc, std::size_t n)
{
    rc.require(n, n, "v_from_recurrence");
    std::vector<R> v;
    if (n == 0)
        return BasicVSeq<R>{};
    v.reserve(2 * n);
    v.push_back(rc.b(1) + R(1));
    for (std::size_t k = 0; k < n; ++k) {
        if (v.back() == R(0))
            throw Error(Errc::division_degenerate,
                        "pivot v_" + std::to_string(2 * k) + " vanishes: J + I has no LU factorization",
                        2 * k);
        v.push_back(rc.d(k + 1) / v.back());
        if (k + 1 < n)
            v.push_back(rc.b(k + 2) + R(1) - v.back());
    }
    return BasicVSeq<R>(std::move(v));
}

#define ORTH_INSTANTIATE_BRIDGE(R)                                                              \
    template BasicRecurrence<R> geronimus_forward<R>(const BasicRealVerblunsky<R>&, std::size_t); \
    template BasicRealVerblunsky<R> geronimus_inverse<R>(const BasicRecurrence<R>&, std::size_t); \
    template BasicVSeq<R> v_from_alpha<R>(const BasicRealVerblunsky<R>&, std::size_t);            \
    template BasicRealVerblunsky<R> alpha_from_v<R>(const BasicVSeq<R>&, std::size_t);            \
    template BasicVSeq<R> v_from_recurrence<R>(const BasicRecurrence<R>&, std::size_t);

ORTH_INSTANTIATE_BRIDGE(double)
ORTH_INSTANTIATE_BRIDGE(extended)

#undef ORTH_INSTANTIATE_BRIDGE

LuReport lu_check(const RealRecurrence& rc, const VSeq& v, std::size_t order, double tol)
{
    LuReport report;
    if (order == 0)
        return report;
    const JacobiMatrix j = jacobi_matrix(rc, order);
    const std::size_t n = order;
    std::vector<double> lower(n * n, 0.0), upper(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i * n + i] = 1.0;
        if (i > 0)
            lower[i * n + i - 1] = v[2 * i - 1];
        upper[i * n + i] = v[2 * i];
        if (i + 1 < n)
            upper[i * n + i + 1] = 1.0;
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            double product = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                product += lower[r * n + k] * upper[k * n + c];
            const double expected = j.at(r, c) + (r == c ? 1.0 : 0.0);
            const double diff = std::abs(product - expected);
            if (diff > report.max_abs_diff)
                report.max_abs_diff = diff;
            if (diff > tol * std::max(1.0, std::abs(expected))) {
                if (report.ok || diff > std::abs(report.worst->actual - report.worst->expected))
                    report.worst = LuMismatch{r, c, expected, product};
                report.ok = false;
            }
        }
    }
    return report;
}

cplx map_x_to_z(cplx x)
{
    const cplx s = std::sqrt(x * x - 1.0);
    const cplx z1 = x - s;
    const cplx z2 = x + s;
    const double m1 = std::abs(z1);
    const double m2 = std::abs(z2);
    if (std::abs(m1 - m2) <= 1e-14 * std::max(1.0, m1 + m2))
        return z1.imag() >= z2.imag() ? z1 : z2;
    return m1 < m2 ? z1 : z2;
}

cplx map_z_to_x(cplx z)
{
    if (z == cplx{})
        throw Error(Errc::zero_argument, "map_z_to_x needs z != 0");
    return (z + 1.0 / z) / 2.0;
}

double check_rel(const RealRecurrence& rc, const VerblunskySeq& vs, std::size_t n, double theta)
{
    const RealVerblunsky alpha = vs.real_view();
    alpha.require(2 * n, "check_rel");
    const double x = std::cos(theta);
    const cplx z = std::polar(1.0, theta);
    const double lhs_scale = orthonormal_scale(rc, n);
    const cplx lhs = lhs_scale * oprl_eval(rc, n, x)[n];
    const double front = kappa(vs, 2 * n) / std::sqrt(2.0 * (1.0 - alpha.ext(static_cast<std::ptrdiff_t>(2 * n) - 1)));
    const cplx phi_z = opuc_eval(vs, 2 * n, z).phi[2 * n];
    const cplx phi_inv = opuc_eval(vs, 2 * n, 1.0 / z).phi[2 * n];
    const double nn = static_cast<double>(n);
    const cplx rhs = front * (std::pow(z, -nn) * phi_z + std::pow(z, nn) * phi_inv);
    return std::abs(lhs - rhs);
}

}  // namespace orth
