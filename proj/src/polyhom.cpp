#include "orth/polyhom.hpp"

#include <algorithm>
#include <sstream>

#include "orth/error.hpp"

namespace orth {

Poly::Poly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { normalize(); }

Poly::Poly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(std::size_t degree, cplx c)
{
    std::vector<cplx> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == cplx{})
        coeffs_.pop_back();
}

cplx Poly::operator()(cplx t) const noexcept
{
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(cplx s)
{
    for (auto& c : coeffs_)
        c *= s;
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<cplx> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

cplx poly_eval(const Poly& p, cplx t) noexcept { return p(t); }

PolyMatrix2 PolyMatrix2::identity() { return {Poly{1.0}, Poly{}, Poly{}, Poly{1.0}}; }

PolyMatrix2 PolyMatrix2::reciprocal() { return {Poly{}, Poly{1.0}, Poly{1.0}, Poly{}}; }

PolyMatrix2 matmul2(const PolyMatrix2& m, const PolyMatrix2& n)
{
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

cplx homography_apply(const PolyMatrix2& m, cplx g, cplx t)
{
    const cplx num = m.a(t) * g + m.b(t);
    const cplx den = m.c(t) * g + m.d(t);
    if (std::abs(den) <= kDenominatorTol * (1.0 + std::abs(num))) {
        std::ostringstream msg;
        msg << "homography pole at t = " << t << ", g = " << g;
        throw Error(Errc::denominator_vanishes, msg.str());
    }
    return num / den;
}

}  // namespace orth
