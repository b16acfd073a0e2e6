#include "orth/opuc.hpp"

#include <cmath>

namespace orth {

VerblunskySeq::VerblunskySeq(std::vector<cplx> alpha) : alpha_(std::move(alpha))
{
    for (std::size_t i = 0; i < alpha_.size(); ++i)
        if (!(std::abs(alpha_[i]) < 1.0))
            throw Error(Errc::alpha_out_of_range, "|alpha_" + std::to_string(i) + "| >= 1", i);
}

VerblunskySeq VerblunskySeq::from_real(std::span<const double> alpha)
{
    return VerblunskySeq(std::vector<cplx>(alpha.begin(), alpha.end()));
}

const cplx& VerblunskySeq::operator[](std::size_t n) const
{
    if (n >= alpha_.size())
        throw_insufficient("alpha", n + 1, alpha_.size());
    return alpha_[n];
}

void VerblunskySeq::require(std::size_t n, const char* what) const
{
    if (alpha_.size() < n)
        throw_insufficient(what, n, alpha_.size());
}

RealVerblunsky VerblunskySeq::real_view() const
{
    std::vector<double> re;
    re.reserve(alpha_.size());
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (alpha_[i].imag() != 0.0)
            throw Error(Errc::complex_alpha, "alpha_" + std::to_string(i) + " is not real", i);
        re.push_back(alpha_[i].real());
    }
    return RealVerblunsky(std::move(re));
}

SzegoValues opuc_eval(const VerblunskySeq& vs, std::size_t n, cplx z)
{
    vs.require(n, "opuc_eval");
    SzegoValues out;
    out.phi.reserve(n + 1);
    out.phi_star.reserve(n + 1);
    out.phi.push_back(1.0);
    out.phi_star.push_back(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx p = out.phi.back();
        const cplx ps = out.phi_star.back();
        out.phi.push_back(z * p - std::conj(vs[k]) * ps);
        out.phi_star.push_back(ps - vs[k] * z * p);
    }
    return out;
}

std::pair<Poly, Poly> szego_polynomials(const VerblunskySeq& vs, std::size_t n)
{
    vs.require(n, "szego_polynomials");
    Poly phi{1.0};
    Poly phi_star{1.0};
    const Poly z = Poly::var();
    for (std::size_t k = 0; k < n; ++k) {
        Poly next = z * phi - phi_star * std::conj(vs[k]);
        phi_star = phi_star - (z * phi) * vs[k];
        phi = std::move(next);
    }
    return {phi, phi_star};
}

bool reversed_poly_check(const VerblunskySeq& vs, std::size_t n, cplx z)
{
    if (z == cplx{})
        throw Error(Errc::zero_argument, "reversed polynomial check needs z != 0");
    const cplx direct = opuc_eval(vs, n, z).phi_star[n];
    const cplx mirror = 1.0 / std::conj(z);
    const cplx via_phi = std::pow(z, static_cast<double>(n)) * std::conj(opuc_eval(vs, n, mirror).phi[n]);
    return std::abs(direct - via_phi) <= 1e-12 * std::max(1.0, std::abs(direct));
}

VerblunskySeq second_kind(const VerblunskySeq& vs)
{
    std::vector<cplx> neg(vs.values());
    for (auto& a : neg)
        a = -a;
    return VerblunskySeq(std::move(neg));
}

VerblunskySeq shift_verblunsky(const VerblunskySeq& vs, std::size_t k)
{
    vs.require(k, "shift_verblunsky");
    const auto& a = vs.values();
    return VerblunskySeq(std::vector<cplx>(a.begin() + static_cast<std::ptrdiff_t>(k), a.end()));
}

VerblunskySeq prepend_verblunsky(const VerblunskySeq& vs, std::span<const cplx> xi)
{
    for (std::size_t i = 0; i < xi.size(); ++i)
        if (!(std::abs(xi[i]) < 1.0))
            throw Error(Errc::invalid_xi, "|xi_" + std::to_string(i) + "| >= 1", i);
    std::vector<cplx> out(xi.begin(), xi.end());
    out.insert(out.end(), vs.values().begin(), vs.values().end());
    return VerblunskySeq(std::move(out));
}

double kappa(const VerblunskySeq& vs, std::size_t n)
{
    vs.require(n, "kappa");
    double prod = 1.0;
    for (std::size_t j = 0; j < n; ++j)
        prod *= 1.0 - std::norm(vs[j]);
    return 1.0 / std::sqrt(prod);
}

}  // namespace orth
