#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orth/compare.hpp"
#include "orth/error.hpp"
#include "orth/fixtures.hpp"
#include "orth/szego.hpp"
#include "orth/verify.hpp"

using namespace orth;

namespace {

RealVerblunsky u_alpha(std::size_t count)
{
    return RealVerblunsky(chebyshev_u_alpha(count));
}

}  // namespace

TEST_CASE("geronimus_forward fixtures")
{
    CHECK(geronimus_forward(RealVerblunsky(std::vector<double>(24, 0.0)), 12) == chebyshev_t_recurrence(12));
    CHECK(max_scaled_diff(geronimus_forward(u_alpha(24), 12), chebyshev_u_recurrence(12)) < 1e-15);
    CHECK(geronimus_forward(as_complex(std::vector<double>(6, 0.0)), 3) == chebyshev_t_recurrence(3));
    CHECK_THROWS_AS(geronimus_forward(VerblunskySeq({cplx(0.0, 0.1), 0.0}), 1), Error);
}

TEST_CASE("even coefficients vanish iff b vanishes")
{
    Sampler s(2);
    std::vector<double> a = s.reals(20, -0.8, 0.8);
    for (std::size_t i = 0; i < a.size(); i += 2)
        a[i] = 0.0;
    const RealRecurrence rc = geronimus_forward(RealVerblunsky(a), 10);
    for (const double b : rc.b_values())
        CHECK(b == 0.0);
    const RealVerblunsky back = geronimus_inverse(RealRecurrence(std::vector<double>(10, 0.0), rc.d_values()), 10);
    for (std::size_t i = 0; i < back.size(); i += 2)
        CHECK(back[i] == 0.0);
}

TEST_CASE("geronimus_inverse fixtures")
{
    CHECK(geronimus_inverse(chebyshev_t_recurrence(12), 12).values() == std::vector<double>(24, 0.0));
    CHECK(max_scaled_diff(geronimus_inverse(chebyshev_u_recurrence(12), 12), u_alpha(24)) < 1e-15);

    try {
        geronimus_inverse(RealRecurrence({0.0}, {1.0}), 1);
        FAIL("expected SupportViolation");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::support_violation);
        CHECK(e.index() == std::optional<std::size_t>(1));
    }
}

TEST_CASE("roundtrips")
{
    Sampler s(7);
    for (int t = 0; t < 25; ++t) {
        const RealVerblunsky a = s.alpha(40);
        const RealRecurrence rc = geronimus_forward(a, 20);
        CHECK(max_scaled_diff(geronimus_forward(geronimus_inverse(rc, 20), 20), rc) < 1e-11);
        // The inverse map amplifies rounding, so this side runs in extended precision.
        const auto xa = precision_cast<extended>(a);
        CHECK(max_scaled_diff(geronimus_inverse(geronimus_forward(xa, 20), 20), xa) < 1e-11);
    }
}

TEST_CASE("v-sequence")
{
    const VSeq vt = v_from_alpha(RealVerblunsky(std::vector<double>(6, 0.0)), 6);
    CHECK(vt.values() == std::vector<double>{1.0, 0.5, 0.5, 0.5, 0.5, 0.5});

    const VSeq vu = v_from_alpha(u_alpha(6), 6);
    const std::vector<double> expect{1.0, 0.25, 0.75, 1.0 / 3.0, 2.0 / 3.0, 0.375};
    CHECK(max_scaled_diff(vu.values(), expect) < 1e-15);

    CHECK(alpha_from_v(VSeq({1.0, 0.5, 0.5, 0.5}), 4).values() == std::vector<double>(4, 0.0));
    CHECK(max_scaled_diff(alpha_from_v(VSeq({1.0, 0.25, 0.75, 1.0 / 3.0}), 4), u_alpha(4)) < 1e-15);

    const VSeq rt = v_from_recurrence(chebyshev_t_recurrence(2), 2);
    CHECK(rt.values() == std::vector<double>{1.0, 0.5, 0.5, 0.5});
    CHECK(max_scaled_diff(v_from_recurrence(chebyshev_u_recurrence(2), 2).values(),
                          std::vector<double>{1.0, 0.25, 0.75, 1.0 / 3.0}) < 1e-15);
}

TEST_CASE("v identities and cross-path agreement")
{
    Sampler s(13);
    for (int t = 0; t < 20; ++t) {
        const RealVerblunsky a = s.alpha(16);
        const RealRecurrence rc = geronimus_forward(a, 8);
        const VSeq v = v_from_alpha(a, 16);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(rc.d(k + 1) - v[2 * k] * v[2 * k + 1]) < 1e-14);
            const double lhs = rc.b(k + 1) + 1.0;
            CHECK(std::abs(lhs - (v.ext(static_cast<std::ptrdiff_t>(2 * k) - 1) + v[2 * k])) < 1e-14);
        }
        // Both continued fractions run against the grain of the forward map,
        // so path agreement is checked in binary128.
        const auto xa = precision_cast<extended>(a);
        const auto xv = v_from_alpha(xa, 16);
        CHECK(max_scaled_diff(v_from_recurrence(geronimus_forward(xa, 8), 8), xv) < 1e-11);
        CHECK(max_scaled_diff(alpha_from_v(xv, 16), xa) < 1e-11);
    }
}

TEST_CASE("lu_check")
{
    const RealRecurrence t = chebyshev_t_recurrence(4);
    CHECK(lu_check(t, v_from_recurrence(t, 4), 4).ok);

    Sampler s(17);
    const RealRecurrence rc = s.recurrence(6);
    const VSeq v = v_from_recurrence(rc, 6);
    CHECK(lu_check(rc, v, 6).ok);

    std::vector<double> bad = v.values();
    bad[3] += 1e-3;
    const LuReport r = lu_check(rc, VSeq(bad), 6);
    CHECK_FALSE(r.ok);
    REQUIRE(r.worst.has_value());
    CHECK(r.max_abs_diff >= 1e-4);
}

TEST_CASE("conformal maps")
{
    CHECK(std::abs(map_x_to_z(2.0) - (2.0 - std::sqrt(3.0))) < 1e-15);
    CHECK(std::abs(map_x_to_z(1.0) - 1.0) < 1e-15);
    const double th = 0.7;
    CHECK(std::abs(map_z_to_x(std::polar(1.0, th)) - std::cos(th)) < 1e-15);
    CHECK_THROWS_AS(map_z_to_x(0.0), Error);

    for (const cplx x : {cplx(-3.0), cplx(0.4, 0.2), cplx(-0.4, -1.5), cplx(0.2)}) {
        const cplx z = map_x_to_z(x);
        CHECK(std::abs(z) <= 1.0 + 1e-15);
        CHECK(std::abs(map_z_to_x(z) - x) < 1e-13);
    }
}

TEST_CASE("relation between line and circle polynomials")
{
    const RealRecurrence t = chebyshev_t_recurrence(4);
    const VerblunskySeq zero(std::vector<cplx>(8));
    CHECK(check_rel(t, zero, 1, std::numbers::pi / 3.0) < 1e-14);
    CHECK(check_rel(t, zero, 0, 0.4) < 1e-14);
    CHECK(check_rel(chebyshev_u_recurrence(4), as_complex(chebyshev_u_alpha(8)), 2, 1.1) < 1e-12);

    Sampler s(23);
    for (int i = 0; i < 10; ++i) {
        const RealVerblunsky a = s.alpha(12);
        const RealRecurrence rc = geronimus_forward(a, 6);
        CHECK(check_rel(rc, as_complex(a.values()), s.index(0, 6), s.uniform(0.0, std::numbers::pi)) < 1e-10);
    }
}
