#include "orth/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "orth/fixtures.hpp"
#include "orth/szego.hpp"

namespace orth {

namespace {

void check_depth(std::size_t depth)
{
    if (depth == 0)
        throw Error(Errc::invalid_spec, "convergent depth must be >= 1");
}

void check_line_point(cplx x)
{
    const cplx nearest(std::clamp(x.real(), -1.0, 1.0), 0.0);
    if (std::abs(x - nearest) <= kForbiddenMargin)
        throw Error(Errc::outside_domain, "x lies within 1e-6 of [-1, 1]");
}

void check_disc_point(cplx z)
{
    if (!(std::abs(z) < 1.0 - kForbiddenMargin))
        throw Error(Errc::outside_domain, "z must satisfy |z| < 1 - 1e-6");
}

// Last three convergents (fewer when depth < 3), oldest first.
std::vector<cplx> s_tail(const SFunctionHandle& h, cplx x)
{
    check_depth(h.depth);
    check_line_point(x);
    const std::size_t depth = h.depth;
    h.rc.require(depth, depth - 1, "s_convergent");
    // Denominators P_k and numerators P^{(1)}_{k-1} share the recurrence;
    // the numerators start from (q_{-1}, q_0) = (-1, 0).
    cplx p_prev = 0.0, p = 1.0;
    cplx q_prev = -1.0, q = 0.0;
    std::vector<cplx> tail;
    for (std::size_t k = 0; k < depth; ++k) {
        const cplx a = x - h.rc.b(k + 1);
        const double dk = k == 0 ? 1.0 : h.rc.d(k);
        const cplx p_next = a * p - dk * p_prev;
        const cplx q_next = a * q - dk * q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
        if (k + 3 >= depth) {
            if (std::abs(p) <= kDenominatorTol * (std::abs(q) + std::abs(p_prev)))
                throw Error(Errc::pole_hit, "S convergent denominator vanishes at depth " + std::to_string(k + 1),
                            k + 1);
            tail.push_back(q / p);
        }
        const double scale = std::max(std::abs(p), std::abs(p_prev));
        if (scale > 1e100) {
            p /= scale;
            p_prev /= scale;
            q /= scale;
            q_prev /= scale;
        }
    }
    return tail;
}

std::vector<cplx> f_tail(const CFunctionHandle& h, cplx z)
{
    check_depth(h.depth);
    check_disc_point(z);
    h.vs.require(h.depth, "f_convergent");
    const SzegoValues first = opuc_eval(h.vs, h.depth, z);
    const SzegoValues second = opuc_eval(second_kind(h.vs), h.depth, z);
    std::vector<cplx> tail;
    for (std::size_t k = h.depth >= 2 ? h.depth - 2 : 1; k <= h.depth; ++k) {
        const cplx den = first.phi_star[k];
        if (std::abs(den) <= kDenominatorTol * (1.0 + std::abs(second.phi_star[k])))
            throw Error(Errc::pole_hit, "F convergent denominator vanishes at depth " + std::to_string(k), k);
        tail.push_back(second.phi_star[k] / den);
    }
    return tail;
}

Convergent plateau(const std::vector<cplx>& tail)
{
    Convergent out{tail.back(), 0.0};
    if (tail.size() < 2)
        return out;
    const cplx step = tail[tail.size() - 1] - tail[tail.size() - 2];
    out.error_estimate = std::abs(step);
    if (tail.size() >= 3) {
        const cplx prev_step = tail[tail.size() - 2] - tail[tail.size() - 3];
        const cplx curvature = step - prev_step;
        if (std::abs(curvature) > 1e-300 && std::abs(curvature) > 1e-3 * std::abs(step))
            out.error_estimate = std::abs(step * step / curvature);
    }
    return out;
}

std::array<Poly, 4> szego_quad(const VerblunskySeq& vs, std::size_t k)
{
    vs.require(k, "Upsilon");
    auto [phi, phi_star] = szego_polynomials(vs, k);
    auto [om, om_star] = szego_polynomials(second_kind(vs), k);
    return {std::move(phi), std::move(phi_star), std::move(om), std::move(om_star)};
}

std::vector<cplx> disc_points()
{
    std::vector<cplx> z;
    for (int j = 0; j < 10; ++j)
        z.push_back(std::polar(0.05 + 0.045 * j, 0.7 * j));
    return z;
}

const std::array<double, 6> kLinePoints{1.5, 2.0, 3.0, -1.5, -2.0, -3.0};

FixtureRow make_row(cplx point, cplx lhs, cplx rhs)
{
    return {point, lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace

cplx s_convergent(const SFunctionHandle& h, cplx x)
{
    return s_tail(h, x).back();
}

Convergent s_evaluate(const SFunctionHandle& h, cplx x)
{
    return plateau(s_tail(h, x));
}

cplx f_convergent(const CFunctionHandle& h, cplx z)
{
    if (z == cplx(0.0))
        return 1.0;
    return f_tail(h, z).back();
}

Convergent f_evaluate(const CFunctionHandle& h, cplx z)
{
    if (z == cplx(0.0))
        return {1.0, 0.0};
    return plateau(f_tail(h, z));
}

double fs_bridge_check(const RealRecurrence& rc, const VerblunskySeq& vs, double x, std::size_t depth)
{
    if (!(std::abs(x) > 1.0))
        throw Error(Errc::outside_domain, "the F/S bridge needs real |x| > 1");
    const cplx z = map_x_to_z(x);
    const cplx s = s_convergent({rc, depth}, x);
    const cplx f = f_convergent({vs, 2 * depth}, z);
    return std::abs(f - (1.0 - z * z) / (2.0 * z) * s);
}

PolyMatrix2 matrix_B_assoc(const RealRecurrence& rc, std::size_t k)
{
    if (k == 0)
        throw Error(Errc::invalid_spec, "B^(k) needs k >= 1");
    rc.require(k, k, "matrix_B_assoc");
    const std::vector<Poly> p = monic_polynomials(rc, k);
    const std::vector<Poly> q = monic_polynomials(shift_coefficients(rc, 1), k - 1);
    const cplx dk = rc.d(k);
    const Poly q_km2 = k >= 2 ? q[k - 2] : Poly{};
    return {p[k], -q[k - 1], p[k - 1] * dk, -(q_km2 * dk)};
}

PolyMatrix2 matrix_B_antiassoc(const RealRecurrence& rc, std::span<const double> pre_b,
                               std::span<const double> pre_d)
{
    const std::size_t k = pre_b.size();
    if (k == 0)
        throw Error(Errc::invalid_spec, "B^(-k) needs k >= 1");
    const RealRecurrence tilde = prepend_coefficients(rc, pre_b, pre_d);
    const std::vector<Poly> p = monic_polynomials(tilde, k);
    const std::vector<Poly> q = monic_polynomials(shift_coefficients(tilde, 1), k - 1);
    const cplx dk = pre_d[k - 1];
    const Poly q_km2 = k >= 2 ? q[k - 2] : Poly{};
    return {q_km2 * dk, -q[k - 1], p[k - 1] * dk, -p[k]};
}

PolyMatrix2 matrix_Upsilon_assoc(const VerblunskySeq& vs, std::size_t k)
{
    const auto [phi, phi_star, om, om_star] = szego_quad(vs, k);
    return {phi + phi_star, om - om_star, phi - phi_star, om + om_star};
}

PolyMatrix2 matrix_Upsilon_antiassoc(const VerblunskySeq& vs, std::span<const cplx> xi)
{
    const auto [phi, phi_star, om, om_star] = szego_quad(prepend_verblunsky(vs, xi), xi.size());
    return {om + om_star, om_star - om, phi_star - phi, phi + phi_star};
}

double szego_conjugate_check(const PolyMatrix2& m, Side side, const SpectralFn& original,
                             const SpectralFn& transformed, cplx z)
{
    if (z == cplx(0.0))
        throw Error(Errc::zero_argument, "conjugation needs z != 0");
    check_disc_point(z);
    const cplx x = map_z_to_x(z);
    if (side == Side::line) {
        const cplx w = 2.0 * z / (1.0 - z * z);
        return std::abs(w * transformed(z) - homography_apply(m, w * original(z), x));
    }
    const cplx r = (1.0 - z * z) / (2.0 * z);
    return std::abs(r * transformed(x) - homography_apply(m, r * original(x), z));
}

double szego_conjugate_check(const PolyMatrix2& m, const CFunctionHandle& original,
                             const CFunctionHandle& transformed, cplx z)
{
    return szego_conjugate_check(
        m, Side::line, [&](cplx t) { return f_convergent(original, t); },
        [&](cplx t) { return f_convergent(transformed, t); }, z);
}

double szego_conjugate_check(const PolyMatrix2& m, const SFunctionHandle& original,
                             const SFunctionHandle& transformed, cplx z)
{
    return szego_conjugate_check(
        m, Side::circle, [&](cplx t) { return s_convergent(original, t); },
        [&](cplx t) { return s_convergent(transformed, t); }, z);
}

cplx corollary_assoc_k1(double b1, double d1, cplx f, cplx z)
{
    const cplx u = 1.0 - z * z;
    return (-u * u / f + u * (z * z - 2.0 * b1 * z + 1.0)) / (4.0 * d1 * z * z);
}

cplx corollary_antiassoc_k1(double b1_new, double d1_new, cplx f, cplx z)
{
    const cplx u = 1.0 - z * z;
    return (4.0 * d1_new * z * z * f - u * (z * z - 2.0 * b1_new * z + 1.0)) / (-u * u);
}

PolyMatrix2 corollary_circle_assoc_k2(const RealVerblunsky& alpha)
{
    alpha.require(2, "corollary_circle_assoc_k2");
    const double b1 = alpha[0];
    const double lm1 = 2.0 / (1.0 - alpha[1]) - 1.0;
    return {Poly{-b1, 1.0}, Poly{-1.0}, Poly{lm1, 0.0, -lm1}, Poly{lm1 * b1, lm1}};
}

PolyMatrix2 corollary_circle_antiassoc_k2(double xi0, double xi1, AntiK2Form form)
{
    if (!(std::abs(xi0) < 1.0 && std::abs(xi1) < 1.0))
        throw Error(Errc::invalid_xi, "xi must lie in (-1, 1)");
    const double kk = (1.0 - xi1) / (1.0 + xi1);
    if (form == AntiK2Form::corrected)
        return {Poly{xi0, 1.0}, Poly{kk}, Poly{-1.0, 0.0, 1.0}, Poly{-kk * xi0, kk}};
    return {Poly{-kk * xi0, kk}, Poly{1.0}, Poly{-kk, 0.0, kk}, Poly{xi0, 1.0}};
}

std::vector<Fixture> corollary_fixtures()
{
    std::vector<Fixture> out;

    out.push_back({"assoc_k1_chebyshev_t",
                   "first associated C-function from F_Omega on Chebyshev-T data vs its own convergent",
                   true, [](std::size_t depth) {
                       const RealRecurrence t = chebyshev_t_recurrence(depth + 1);
                       const CFunctionHandle base{as_complex(std::vector<double>(depth, 0.0)), depth};
                       const RealVerblunsky shifted = geronimus_inverse(shift_coefficients(t, 1), depth);
                       const CFunctionHandle target{as_complex(shifted.values()), 2 * depth};
                       std::vector<FixtureRow> rows;
                       for (const cplx z : disc_points())
                           rows.push_back(make_row(z, corollary_assoc_k1(0.0, 0.5, f_convergent(base, z), z),
                                                   f_convergent(target, z)));
                       return rows;
                   }});

    out.push_back({"antiassoc_k1_chebyshev_u",
                   "1/F of Chebyshev-U with (b, d) = (0.1, 0.3) prepended vs its own convergent", true,
                   [](std::size_t depth) {
                       const std::vector<double> a = chebyshev_u_alpha(2 * depth);
                       const CFunctionHandle base{as_complex(a), 2 * depth};
                       const RealRecurrence u = chebyshev_u_recurrence(depth);
                       const std::array<double, 1> pb{0.1}, pd{0.3};
                       const RealVerblunsky tilde =
                           geronimus_inverse(prepend_coefficients<double>(u, pb, pd), depth);
                       const CFunctionHandle target{as_complex(tilde.values()), 2 * depth};
                       std::vector<FixtureRow> rows;
                       for (const cplx z : disc_points())
                           rows.push_back(make_row(z, corollary_antiassoc_k1(0.1, 0.3, f_convergent(base, z), z),
                                                   1.0 / f_convergent(target, z)));
                       return rows;
                   }});

    auto circle_assoc = [](std::vector<double> a, std::size_t depth) {
        const RealVerblunsky alpha(a);
        const PolyMatrix2 m = corollary_circle_assoc_k2(alpha);
        const SFunctionHandle base{geronimus_forward(alpha, depth), depth};
        const RealVerblunsky shifted(std::vector<double>(a.begin() + 2, a.end()));
        const SFunctionHandle target{geronimus_forward(shifted, depth), depth};
        std::vector<FixtureRow> rows;
        for (const double x : kLinePoints)
            rows.push_back(make_row(x, homography_apply(m, s_convergent(base, x), x), s_convergent(target, x)));
        return rows;
    };
    out.push_back({"circle_assoc_k2_lebesgue", "S of the circle-side shift by two, alpha = 0", true,
                   [circle_assoc](std::size_t depth) {
                       return circle_assoc(std::vector<double>(2 * depth + 2, 0.0), depth);
                   }});
    out.push_back({"circle_assoc_k2_chebyshev_u", "S of the circle-side shift by two, Chebyshev-U alpha", true,
                   [circle_assoc](std::size_t depth) { return circle_assoc(chebyshev_u_alpha(2 * depth + 2), depth); }});

    auto circle_anti = [](AntiK2Form form, std::size_t depth) {
        const double xi0 = 0.2, xi1 = -0.3;
        const std::vector<double> a = chebyshev_u_alpha(2 * depth);
        const PolyMatrix2 m = corollary_circle_antiassoc_k2(xi0, xi1, form);
        const SFunctionHandle base{geronimus_forward(RealVerblunsky(a), depth), depth};
        std::vector<double> joined{xi0, xi1};
        joined.insert(joined.end(), a.begin(), a.end());
        const SFunctionHandle target{geronimus_forward(RealVerblunsky(joined), depth), depth};
        std::vector<FixtureRow> rows;
        for (const double x : kLinePoints)
            rows.push_back(make_row(x, homography_apply(m, s_convergent(base, x), x), s_convergent(target, x)));
        return rows;
    };
    out.push_back({"circle_antiassoc_k2_corrected",
                   "S after prepending xi = (0.2, -0.3) to Chebyshev-U alpha, corrected matrix", true,
                   [circle_anti](std::size_t depth) { return circle_anti(AntiK2Form::corrected, depth); }});
    out.push_back({"circle_antiassoc_k2_verbatim",
                   "same data through the matrix as originally printed; disagrees unless xi = 0", false,
                   [circle_anti](std::size_t depth) { return circle_anti(AntiK2Form::verbatim, depth); }});
    return out;
}

}  // namespace orth
