#include <doctest.h>

#include <cmath>

#include "orth/compare.hpp"
#include "orth/error.hpp"
#include "orth/fixtures.hpp"
#include "orth/perturb.hpp"
#include "orth/szego.hpp"
#include "orth/verify.hpp"

using namespace orth;

namespace {

RealVerblunsky u_alpha(std::size_t count)
{
    return RealVerblunsky(chebyshev_u_alpha(count));
}

template <typename F>
Errc code_of(F&& f)
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

TEST_CASE("spec validation")
{
    CHECK(code_of([] { validate(CoDilated{0, 0.5}); }) == Errc::invalid_spec);
    CHECK(code_of([] { validate(CoDilated{1, -1.0}); }) == Errc::invalid_spec);
    CHECK(code_of([] { validate(KModification{0, cplx(1.0, 0.0)}); }) == Errc::invalid_eta);
    CHECK(code_of([] { validate(Sieve{0}); }) == Errc::invalid_spec);
    CHECK(code_of([] { validate(AntiAssociated{{}, {}, {cplx(0.0, 1.0)}}); }) == Errc::invalid_xi);
    CHECK_NOTHROW(validate(CoRecursive{0, 0.3}));

    CHECK(applies_to(CoDilated{}, Side::line));
    CHECK_FALSE(applies_to(CoDilated{}, Side::circle));
    CHECK(applies_to(KModification{}, Side::circle));
    CHECK(applies_to(Associated{}, Side::line));
    CHECK(applies_to(Associated{}, Side::circle));
    CHECK(kind_name(Sieve{2}) == "sieve");
}

TEST_CASE("coprl_apply")
{
    const RealRecurrence t = chebyshev_t_recurrence(6);
    const std::vector<PerturbationSpec> dil{CoDilated{1, 0.5}};
    CHECK(coprl_apply<double>(t, dil) == chebyshev_u_recurrence(6));

    const std::vector<PerturbationSpec> rec{CoRecursive{0, 0.3}};
    const RealRecurrence r = coprl_apply<double>(t, rec);
    CHECK(r.b(1) == 0.3);
    CHECK(r.b(2) == 0.0);
    CHECK(r.d_values() == t.d_values());

    const std::vector<PerturbationSpec> ident{CoDilated{2, 1.0}, CoRecursive{1, 0.0}};
    CHECK(coprl_apply<double>(t, ident) == t);

    const std::vector<PerturbationSpec> dup{CoDilated{2, 0.5}, CoDilated{2, 0.7}};
    CHECK(code_of([&] { coprl_apply<double>(t, dup); }) == Errc::invalid_spec);
    const std::vector<PerturbationSpec> wrong{Sieve{2}};
    CHECK(code_of([&] { coprl_apply<double>(t, wrong); }) == Errc::invalid_spec);
}

TEST_CASE("coprl_verblunsky")
{
    const RealRecurrence t = chebyshev_t_recurrence(8);
    CHECK(max_scaled_diff(coprl_verblunsky(t, 1, 0.5, 0.0, 8), u_alpha(16)) < 1e-14);
    CHECK(coprl_verblunsky(t, 2, 1.0, 0.0, 8) == geronimus_inverse(t, 8));
    CHECK(code_of([&] { coprl_verblunsky(t, 1, 2.0, 0.0, 8); }) == Errc::support_violation);

    Sampler s(31);
    for (int i = 0; i < 20; ++i) {
        const RealRecurrence rc = s.recurrence(8);
        const std::size_t k = s.index(1, 4);
        const double lam = s.uniform(0.9, 1.1), tau = s.uniform(-0.01, 0.01);
        try {
            const auto th = coprl_verblunsky(rc, k, lam, tau, 8, Path::theorem);
            const auto or_ = coprl_verblunsky(rc, k, lam, tau, 8, Path::oracle);
            CHECK(max_scaled_diff(th, or_) < 1e-10);
        }
        catch (const Error& e) {
            CHECK(e.code() == Errc::support_violation);
        }
    }
}

TEST_CASE("associated and anti-associated on the line")
{
    const RealRecurrence t = chebyshev_t_recurrence(8);
    CHECK(max_scaled_diff(assoc_oprl_to_verblunsky(t, 1, 6), u_alpha(12)) < 1e-14);

    const RealRecurrence u = chebyshev_u_recurrence(8);
    const std::vector<double> pb{0.0}, pd{0.25};
    CHECK(max_scaled_diff(antiassoc_oprl_to_verblunsky<double>(u, pb, pd, 8), u_alpha(16)) < 1e-14);
    CHECK(max_scaled_diff(antiassoc_oprl_to_verblunsky<double>(u, {}, {}, 8), geronimus_inverse(u, 8)) == 0.0);
}

TEST_CASE("copuc_apply and sieve")
{
    const VerblunskySeq zero(std::vector<cplx>(4));
    CHECK(copuc_apply(zero, 0, 0.3) == as_complex({0.3, 0.0, 0.0, 0.0}));
    CHECK(copuc_apply(zero, 2, 0.0) == zero);
    CHECK(code_of([&] { copuc_apply(zero, 0, 1.0); }) == Errc::invalid_eta);

    const VerblunskySeq a = as_complex({0.1, 0.2, 0.3});
    CHECK(sieve(a, 1) == a);
    CHECK(sieve(a, 2) == as_complex({0.0, 0.1, 0.0, 0.2, 0.0, 0.3}));
    const auto s3 = sieve(a, 3).values();
    CHECK(std::vector<cplx>(s3.begin(), s3.begin() + 6) == as_complex({0.0, 0.0, 0.1, 0.0, 0.0, 0.2}).values());
}

TEST_CASE("circle associated closed forms, odd k fixture")
{
    const RealVerblunsky a = u_alpha(40);
    const RealRecurrence h = assoc_opuc_to_recurrence(a, 1, 6);
    CHECK(std::abs(h.b(1) + 0.5) < 1e-15);
    CHECK(std::abs(h.d(1) - 3.0 / 8.0) < 1e-15);
    CHECK(std::abs(h.d(2) - 2.0 / 9.0) < 1e-15);
    CHECK(std::abs(h.b(2) - 1.0 / 12.0) < 1e-15);
    CHECK(max_scaled_diff(h, assoc_opuc_to_recurrence(a, 1, 6, Path::oracle)) < 1e-14);

    const RealVerblunsky zero(std::vector<double>(30, 0.0));
    for (const std::size_t k : {1u, 2u, 3u})
        CHECK(max_scaled_diff(assoc_opuc_to_recurrence(zero, k, 5), chebyshev_t_recurrence(5)) == 0.0);
}

TEST_CASE("circle anti-associated closed forms")
{
    const RealVerblunsky zero(std::vector<double>(30, 0.0));
    const std::vector<double> xi{0.0, -0.5};
    const RealRecurrence r = antiassoc_opuc_to_recurrence<double>(zero, xi, 4);
    CHECK(r.b(1) == 0.0);
    CHECK(std::abs(r.d(1) - 0.25) < 1e-15);
    CHECK(r.b(2) == 0.0);
    CHECK(std::abs(r.d(2) - 0.375) < 1e-15);
    CHECK(max_scaled_diff(r, antiassoc_opuc_to_recurrence<double>(zero, xi, 4, Path::oracle)) < 1e-15);

    const RealVerblunsky a = u_alpha(20);
    CHECK(antiassoc_opuc_to_recurrence<double>(a, {}, 8) == geronimus_forward(a, 8));

    Sampler s(41);
    for (int i = 0; i < 20; ++i) {
        const RealVerblunsky b = s.alpha(40);
        const std::vector<double> x = s.reals(s.index(1, 5), -0.7, 0.7);
        CHECK(max_scaled_diff(antiassoc_opuc_to_recurrence<double>(b, x, 10),
                              antiassoc_opuc_to_recurrence<double>(b, x, 10, Path::oracle)) < 1e-10);
    }
}

TEST_CASE("sieved recurrences")
{
    CHECK(sieve2_recurrence(RealVerblunsky(std::vector<double>(8, 0.0)), 8) == chebyshev_t_recurrence(8));
    std::vector<double> odd;
    for (int m = 0; m < 8; ++m)
        odd.push_back(-1.0 / (m + 2));
    CHECK(max_scaled_diff(sieve2_recurrence(RealVerblunsky(odd), 8), chebyshev_u_recurrence(8)) < 1e-15);

    Sampler s(43);
    const RealVerblunsky a = s.alpha(10);
    CHECK(max_scaled_diff(sieved_kmod_recurrence(a, 3, a[3], 10), sieve2_recurrence(a, 10)) < 1e-15);
    CHECK(max_scaled_diff(sieved_kmod_recurrence(a, 3, 0.2, 10),
                          sieved_kmod_recurrence(a, 3, 0.2, 10, Path::oracle)) < 1e-14);
}

TEST_CASE("symmetric families")
{
    const std::vector<double> dt = chebyshev_t_recurrence(8).d_values();
    CHECK(symmetric_verblunsky<double>(dt, 8).values() == std::vector<double>(16, 0.0));
    const std::vector<double> du = chebyshev_u_recurrence(8).d_values();
    CHECK(max_scaled_diff(symmetric_verblunsky<double>(du, 8), u_alpha(16)) < 1e-15);
    CHECK(symmetric_codilated_verblunsky<double>(du, 2, 1.0, 8) == symmetric_verblunsky<double>(du, 8));
    CHECK(max_scaled_diff(symmetric_codilated_verblunsky<double>(dt, 1, 0.5, 8), u_alpha(16)) < 1e-14);
}

TEST_CASE("LU perturbations")
{
    const RealRecurrence t = chebyshev_t_recurrence(8);
    const VSeq v = perturbed_v(t, 1, 0.5, 0.0, 3);
    const std::vector<double> expect{1.0, 0.25, 0.75, 1.0 / 3.0, 2.0 / 3.0, 0.375};
    CHECK(max_scaled_diff(v.values(), expect) < 1e-15);
    CHECK(max_scaled_diff(perturbed_alpha_lu(t, 1, 0.5, 0.0, 8), u_alpha(16)) < 1e-13);
    CHECK(max_scaled_diff(perturbed_alpha_lu(t, 2, 1.0, 0.0, 8), geronimus_inverse(t, 8)) < 1e-15);

    const LuDiscrepancyReport r = lu_discrepancy(t, 1, 0.5, 0.0, 8);
    CHECK_FALSE(r.agrees());
    bool found = false;
    for (const auto& e : r.entries)
        if (e.quantity == "v" && e.index == 1) {
            found = true;
            CHECK(e.consistent == doctest::Approx(0.25));
            CHECK(e.stated == doctest::Approx(0.5));
        }
    CHECK(found);
    CHECK(lu_discrepancy(t, 2, 1.0, 0.01, 8).agrees());
}
