#include "orth/oprl.hpp"

#include <cmath>

namespace orth {

double JacobiMatrix::at(std::size_t i, std::size_t j) const noexcept
{
    if (i == j)
        return diagonal[i];
    if (j == i + 1)
        return 1.0;
    if (i == j + 1)
        return subdiagonal[j];
    return 0.0;
}

std::vector<cplx> oprl_eval(const RealRecurrence& rc, std::size_t n, cplx x)
{
    rc.require(n, n == 0 ? 0 : n - 1, "oprl_eval");
    std::vector<cplx> p;
    p.reserve(n + 1);
    p.push_back(1.0);
    cplx prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = k == 0 ? 1.0 : rc.d(k);
        const cplx next = (x - rc.b(k + 1)) * p.back() - dk * prev;
        prev = p.back();
        p.push_back(next);
    }
    return p;
}

std::vector<Poly> monic_polynomials(const RealRecurrence& rc, std::size_t n)
{
    rc.require(n, n == 0 ? 0 : n - 1, "monic_polynomials");
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly{1.0});
    Poly prev;
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = k == 0 ? 1.0 : rc.d(k);
        Poly next = Poly{-rc.b(k + 1), 1.0} * p.back() - prev * cplx(dk);
        prev = p.back();
        p.push_back(std::move(next));
    }
    return p;
}

JacobiMatrix jacobi_matrix(const RealRecurrence& rc, std::size_t order)
{
    rc.require(order, order == 0 ? 0 : order - 1, "jacobi_matrix");
    JacobiMatrix j;
    j.diagonal.assign(rc.b_values().begin(), rc.b_values().begin() + static_cast<std::ptrdiff_t>(order));
    if (order > 1)
        j.subdiagonal.assign(rc.d_values().begin(),
                             rc.d_values().begin() + static_cast<std::ptrdiff_t>(order - 1));
    return j;
}

double orthonormal_scale(const RealRecurrence& rc, std::size_t n)
{
    rc.require(0, n, "orthonormal_scale");
    double prod = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!(rc.d(k) > 0.0))
            throw Error(Errc::non_positive_d, "d_" + std::to_string(k) + " must be positive", k);
        prod *= rc.d(k);
    }
    return 1.0 / std::sqrt(prod);
}

}  // namespace orth
