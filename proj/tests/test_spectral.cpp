#include <doctest.h>

#include <cmath>

#include "orth/error.hpp"
#include "orth/fixtures.hpp"
#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/spectral.hpp"
#include "orth/szego.hpp"
#include "orth/verify.hpp"

using namespace orth;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    }
    catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::parse_error;
}

}  // namespace

TEST_CASE("S convergents")
{
    const SFunctionHandle t{chebyshev_t_recurrence(30), 30};
    CHECK(std::abs(s_convergent(t, 2.0) - 1.0 / kSqrt3) < 1e-9);
    const SFunctionHandle u{chebyshev_u_recurrence(30), 30};
    CHECK(std::abs(s_convergent(u, 2.0) - 2.0 * (2.0 - kSqrt3)) < 1e-9);

    const SFunctionHandle one{RealRecurrence({0.3}, {}), 1};
    CHECK(std::abs(s_convergent(one, 2.0) - 1.0 / 1.7) < 1e-15);
    const SFunctionHandle two{chebyshev_t_recurrence(2), 2};
    CHECK(std::abs(s_convergent(two, 2.0) - 2.0 / 3.5) < 1e-15);

    const Convergent c = s_evaluate(t, 2.0);
    CHECK(c.error_estimate < 1e-9);

    CHECK(code_of([&] { s_convergent(t, 0.5); }) == Errc::outside_domain);
    CHECK(code_of([&] { s_convergent(t, cplx(0.3, 1e-8)); }) == Errc::outside_domain);
    // P_2 = x^2 - 2 vanishes at sqrt 2, off the segment.
    const SFunctionHandle pole{RealRecurrence({0.0, 0.0}, {2.0}), 2};
    CHECK(code_of([&] { s_convergent(pole, std::sqrt(2.0)); }) == Errc::pole_hit);
}

TEST_CASE("F convergents")
{
    const CFunctionHandle zero{VerblunskySeq(std::vector<cplx>(10)), 10};
    CHECK(f_convergent(zero, 0.4) == cplx(1.0));
    const CFunctionHandle u{as_complex(chebyshev_u_alpha(30)), 30};
    CHECK(std::abs(f_convergent(u, 0.3) - 0.91) < 1e-9);
    CHECK(f_convergent(CFunctionHandle{as_complex({0.5}), 1}, 0.0) == cplx(1.0));
    CHECK(code_of([&] { f_convergent(u, 1.0); }) == Errc::outside_domain);

    Sampler s(5);
    const CFunctionHandle r{s.complex_alpha(20), 20};
    CHECK(f_convergent(r, 0.0) == cplx(1.0));
}

TEST_CASE("F and S bridge")
{
    const RealRecurrence t = chebyshev_t_recurrence(40);
    CHECK(fs_bridge_check(t, VerblunskySeq(std::vector<cplx>(80)), 2.0) < 1e-12);
    const RealRecurrence u = chebyshev_u_recurrence(40);
    CHECK(fs_bridge_check(u, as_complex(chebyshev_u_alpha(80)), 2.0) < 1e-9);

    Sampler s(8);
    for (int i = 0; i < 5; ++i) {
        const RealVerblunsky a = s.alpha(80);
        const RealRecurrence rc = geronimus_forward(a, 40);
        for (const double x : {1.5, -1.5, 2.0, -2.0, 3.0})
            CHECK(fs_bridge_check(rc, as_complex(a.values()), x) < 1e-8);
    }
}

TEST_CASE("B transfer matrices")
{
    const RealRecurrence t = chebyshev_t_recurrence(40);
    const PolyMatrix2 b1 = matrix_B_assoc(t, 1);
    const double st = 1.0 / kSqrt3;
    CHECK(std::abs(homography_apply(b1, st, 2.0) - (4.0 - 2.0 * kSqrt3)) < 1e-14);
    CHECK(b1.det()(2.0) != cplx(0.0));

    Sampler s(19);
    for (int i = 0; i < 6; ++i) {
        const RealRecurrence rc = s.recurrence(46);
        const std::size_t k = s.index(1, 3);
        const PolyMatrix2 m = matrix_B_assoc(rc, k);
        const SFunctionHandle orig{rc, 40};
        const SFunctionHandle shifted{shift_coefficients(rc, k), 40};
        for (const double x : {1.5, -2.0, 3.0})
            CHECK(std::abs(homography_apply(m, s_convergent(orig, x), x) - s_convergent(shifted, x)) < 1e-8);

        const std::vector<double> pb = s.reals(k, -0.3, 0.3), pd = s.reals(k, 0.05, 0.2);
        const PolyMatrix2 a = matrix_B_antiassoc(rc, pb, pd);
        const SFunctionHandle pre{prepend_coefficients<double>(rc, pb, pd), 40};
        for (const double x : {1.5, -2.0, 3.0})
            CHECK(std::abs(homography_apply(a, s_convergent(orig, x), x) - s_convergent(pre, x)) < 1e-8);
    }
}

TEST_CASE("Upsilon transfer matrices")
{
    const VerblunskySeq zero(std::vector<cplx>(10));
    const PolyMatrix2 y0 = matrix_Upsilon_assoc(zero, 0);
    CHECK(y0 == PolyMatrix2{Poly{2.0}, Poly{}, Poly{}, Poly{2.0}});
    const PolyMatrix2 y2 = matrix_Upsilon_assoc(zero, 2);
    CHECK(std::abs(homography_apply(y2, 1.0, 0.3) - 1.0) < 1e-15);

    Sampler s(29);
    for (int i = 0; i < 6; ++i) {
        const VerblunskySeq vs = s.complex_alpha(46);
        const std::size_t k = s.index(1, 3);
        const CFunctionHandle orig{vs, 40};
        const CFunctionHandle shifted{shift_verblunsky(vs, k), 40};
        const std::vector<cplx> xi = s.complex_alpha(k, 0.6).values();
        const CFunctionHandle pre{prepend_verblunsky(vs, xi), 40};
        const PolyMatrix2 ya = matrix_Upsilon_assoc(vs, k);
        const PolyMatrix2 yb = matrix_Upsilon_antiassoc(vs, xi);
        for (const cplx z : {cplx(0.2), cplx(-0.3, 0.2), cplx(0.0, 0.45)}) {
            CHECK(std::abs(homography_apply(ya, f_convergent(orig, z), z) - f_convergent(shifted, z)) < 1e-8);
            CHECK(std::abs(homography_apply(yb, f_convergent(orig, z), z) - f_convergent(pre, z)) < 1e-8);
        }
    }
}

TEST_CASE("Szegő conjugation")
{
    const CFunctionHandle t{VerblunskySeq(std::vector<cplx>(80)), 80};
    const CFunctionHandle u{as_complex(chebyshev_u_alpha(80)), 80};
    CHECK(szego_conjugate_check(PolyMatrix2::identity(), t, t, 0.3) == 0.0);
    CHECK(szego_conjugate_check(matrix_B_assoc(chebyshev_t_recurrence(3), 1), t, u, 0.2) < 1e-8);

    // Circle-side matrix conjugated onto S: shifting the U coefficients by two.
    const std::vector<double> ua = chebyshev_u_alpha(100);
    const SFunctionHandle su{chebyshev_u_recurrence(40), 40};
    const SFunctionHandle su2{geronimus_forward(RealVerblunsky(std::vector<double>(ua.begin() + 2, ua.end())), 40), 40};
    CHECK(szego_conjugate_check(matrix_Upsilon_assoc(as_complex(ua), 2), su, su2, 2.0 - kSqrt3) < 1e-8);
}

TEST_CASE("corollaries")
{
    for (const cplx z : {cplx(0.1), cplx(0.3, 0.2), cplx(-0.4)})
        CHECK(std::abs(corollary_assoc_k1(0.0, 0.5, 1.0, z) - (1.0 - z * z)) < 1e-14);

    // Shifting alpha = 0 by two changes nothing, so the matrix fixes S_T.
    const PolyMatrix2 m0 = corollary_circle_assoc_k2(RealVerblunsky(std::vector<double>(4, 0.0)));
    CHECK(std::abs(homography_apply(m0, 1.0 / kSqrt3, 2.0) - 1.0 / kSqrt3) < 1e-14);

    const PolyMatrix2 mu = corollary_circle_assoc_k2(RealVerblunsky(chebyshev_u_alpha(4)));
    const double lhs = homography_apply(mu, 2.0 * (2.0 - kSqrt3), 2.0).real();
    const SFunctionHandle shifted{RealRecurrence(std::vector<double>(40, 0.0), [] {
                                      std::vector<double> d(40, 0.25);
                                      d[0] = 1.0 / 3.0;
                                      return d;
                                  }()),
                                  40};
    const double rhs = s_convergent(shifted, 2.0).real();
    CHECK(std::abs(lhs - 0.54904) < 1e-4);
    CHECK(std::abs(rhs - 0.54904) < 1e-4);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    const PolyMatrix2 c = corollary_circle_antiassoc_k2(0.0, 0.0, AntiK2Form::corrected);
    const PolyMatrix2 v = corollary_circle_antiassoc_k2(0.0, 0.0, AntiK2Form::verbatim);
    CHECK(std::abs(homography_apply(c, 0.5, 2.0) - homography_apply(v, 0.5, 2.0)) < 1e-14);
}

TEST_CASE("corollary fixture set")
{
    const auto fixtures = corollary_fixtures();
    CHECK(fixtures.size() >= 4);
    bool saw_counterexample = false;
    for (const auto& f : fixtures) {
        CAPTURE(f.name);
        double worst = 0.0;
        for (const auto& row : f.rows(40))
            worst = std::max(worst, row.residual);
        if (f.expect_agreement)
            CHECK(worst < 1e-9);
        else {
            saw_counterexample = true;
            CHECK(worst > 1e-3);
        }
    }
    CHECK(saw_counterexample);
}
