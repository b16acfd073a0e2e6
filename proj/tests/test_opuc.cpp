#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orth/error.hpp"
#include "orth/fixtures.hpp"
#include "orth/opuc.hpp"
#include "orth/verify.hpp"

using namespace orth;

TEST_CASE("opuc_eval Lebesgue")
{
    const auto v = opuc_eval(VerblunskySeq(std::vector<cplx>(3)), 3, 0.5);
    CHECK(v.phi == std::vector<cplx>{1.0, 0.5, 0.25, 0.125});
    CHECK(v.phi_star == std::vector<cplx>{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("opuc_eval two steps")
{
    const VerblunskySeq vs = as_complex({0.0, -0.5});
    const auto v = opuc_eval(vs, 2, cplx(0.0, 1.0));
    CHECK(std::abs(v.phi[2] - cplx(-0.5)) < 1e-15);
    // Phi_n(0) = -conj(alpha_{n-1}).
    CHECK(opuc_eval(vs, 2, 0.0).phi[2] == cplx(0.5));
}

TEST_CASE("opuc invariants on random data")
{
    Sampler s(21);
    const VerblunskySeq vs = s.complex_alpha(8);
    const VerblunskySeq om = second_kind(vs);
    for (int i = 0; i < 20; ++i) {
        const cplx z = std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi));
        const auto v = opuc_eval(vs, 8, z);
        for (std::size_t n = 0; n <= 8; ++n)
            CHECK(std::abs(std::abs(v.phi[n]) - std::abs(v.phi_star[n])) < 1e-12);
    }
    for (int i = 0; i < 10; ++i) {
        const cplx z(s.uniform(-0.9, 0.9), s.uniform(-0.9, 0.9));
        const auto p = opuc_eval(vs, 8, z);
        const auto o = opuc_eval(om, 8, z);
        const cplx lhs = p.phi[8] * o.phi_star[8] + o.phi[8] * p.phi_star[8];
        // Monic normalization carries the factor prod (1 - |alpha_j|^2).
        double rho = 1.0;
        for (const cplx& a : vs.values())
            rho *= 1.0 - std::norm(a);
        const cplx rhs = 2.0 * rho * std::pow(z, 8);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
        CHECK(reversed_poly_check(vs, 8, z));
    }
    CHECK(opuc_eval(vs, 5, 0.0).phi_star[5] == cplx(1.0));
}

TEST_CASE("szego_polynomials")
{
    const auto [phi, star] = szego_polynomials(as_complex({0.0, -0.5}), 2);
    CHECK(phi == Poly{0.5, 0.0, 1.0});
    CHECK(star == Poly{1.0, 0.0, 0.5});
    CHECK(reversed_poly_check(as_complex({0.0, -0.5}), 2, 2.0));
    try {
        reversed_poly_check(as_complex({0.0, -0.5}), 2, 0.0);
        FAIL("expected ZeroArgument");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::zero_argument);
    }
}

TEST_CASE("sequence manipulation")
{
    const VerblunskySeq zero(std::vector<cplx>(4));
    CHECK(second_kind(zero) == zero);
    CHECK(second_kind(as_complex({0.0, -0.5})) == as_complex({0.0, 0.5}));

    Sampler s(4);
    const VerblunskySeq vs = s.complex_alpha(6);
    CHECK(second_kind(second_kind(vs)) == vs);
    CHECK(shift_verblunsky(vs, 0) == vs);
    CHECK(shift_verblunsky(as_complex(chebyshev_u_alpha(6)), 2) == as_complex({0.0, -1.0 / 3.0, 0.0, -0.25}));

    const std::vector<cplx> xi{cplx(0.3)};
    CHECK(prepend_verblunsky(zero, xi) == as_complex({0.3, 0.0, 0.0, 0.0, 0.0}));
    CHECK(prepend_verblunsky(vs, {}) == vs);
    const std::vector<cplx> two{cplx(0.1, 0.2), cplx(-0.4)};
    CHECK(shift_verblunsky(prepend_verblunsky(vs, two), 2) == vs);

    const std::vector<cplx> bad{cplx(0.8, 0.8)};
    try {
        prepend_verblunsky(vs, bad);
        FAIL("expected InvalidXi");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_xi);
    }
}

TEST_CASE("kappa")
{
    CHECK(kappa(VerblunskySeq(std::vector<cplx>(5)), 5) == 1.0);
    CHECK(kappa(as_complex({0.0, -0.5}), 0) == 1.0);
    CHECK(std::abs(kappa(as_complex({0.0, -0.5}), 2) - 2.0 / std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("real view")
{
    CHECK(VerblunskySeq::from_real(std::vector<double>{0.2}).real_view().values() == std::vector<double>{0.2});
    try {
        VerblunskySeq({cplx(0.1, 0.1)}).real_view();
        FAIL("expected ComplexAlpha");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::complex_alpha);
    }
    CHECK_THROWS_AS(RealVerblunsky({1.0}), Error);
}
