#include <doctest.h>

#include <cmath>
#include <random>

#include "orth/error.hpp"
#include "orth/polyhom.hpp"

using namespace orth;

namespace {

bool close(cplx a, cplx b, double tol = 1e-12)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

Poly random_linear(std::mt19937_64& g)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return Poly{cplx(u(g), u(g)), cplx(u(g), u(g))};
}

}  // namespace

TEST_CASE("poly_eval")
{
    CHECK(poly_eval(Poly{1.0}, 5.0) == cplx(1.0));
    CHECK(close(poly_eval(Poly{-0.5, 0.0, 1.0}, 2.0), 3.5));
    const double z = 2.0 - std::sqrt(3.0);
    // (1 - z^2) / (2z) = sqrt 3 at z = 2 - sqrt 3, so 1 - z^2 = 2 sqrt3 z.
    CHECK(close(poly_eval(Poly{1.0, 0.0, -1.0}, z) / (2.0 * z), std::sqrt(3.0)));
}

TEST_CASE("poly normalization and arithmetic")
{
    const Poly p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(Poly{}.degree() == -1);
    CHECK((p - p).is_zero());
    const Poly sq = Poly{-1.0, 1.0} * Poly{1.0, 1.0};
    CHECK(sq == Poly{-1.0, 0.0, 1.0});
    CHECK(Poly::monomial(3).degree() == 3);
    CHECK(Poly::var()(cplx(0.0, 2.0)) == cplx(0.0, 2.0));
}

TEST_CASE("homography_apply")
{
    CHECK(close(homography_apply(PolyMatrix2::identity(), 0.7, 123.0), 0.7));
    CHECK(close(homography_apply(PolyMatrix2::reciprocal(), 4.0, -3.0), 0.25));

    const Poly x = Poly::var();
    const PolyMatrix2 m{x, Poly{-1.0}, Poly{1.0, 0.0, -1.0}, x};
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(close(homography_apply(m, s, 2.0), s));

    SUBCASE("pole")
    {
        const PolyMatrix2 pole{Poly{1.0}, Poly{}, Poly{1.0}, Poly{-1.0}};
        try {
            homography_apply(pole, 1.0, 0.0);
            FAIL("expected a vanishing denominator");
        }
        catch (const Error& e) {
            CHECK(e.code() == Errc::denominator_vanishes);
        }
    }
}

TEST_CASE("matmul2 composes homographies")
{
    const PolyMatrix2 r = PolyMatrix2::reciprocal();
    CHECK(matmul2(r, r) == PolyMatrix2::identity());

    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int trial = 0; trial < 20; ++trial) {
        const PolyMatrix2 m{random_linear(g), random_linear(g), random_linear(g), random_linear(g)};
        const PolyMatrix2 n{random_linear(g), random_linear(g), random_linear(g), random_linear(g)};
        CHECK(matmul2(PolyMatrix2::identity(), n) == n);
        const cplx t(u(g), u(g));
        const cplx w(u(g), u(g));
        const cplx lhs = homography_apply(m * n, w, t);
        const cplx rhs = homography_apply(m, homography_apply(n, w, t), t);
        CHECK(close(lhs, rhs, 1e-10));
    }
}

TEST_CASE("det and adjugate")
{
    const Poly x = Poly::var();
    const PolyMatrix2 m{x, Poly{2.0}, Poly{1.0}, x};
    CHECK(m.det() == Poly{-2.0, 0.0, 1.0});
    const PolyMatrix2 prod = m * m.adjugate();
    CHECK(prod.b.is_zero());
    CHECK(prod.c.is_zero());
    CHECK(prod.a == m.det());
}
