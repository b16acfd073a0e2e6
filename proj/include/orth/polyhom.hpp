#pragma once

#include <initializer_list>
#include <vector>

#include "orth/scalar.hpp"

namespace orth {

/// Dense univariate polynomial, coefficients in ascending degree. Trailing
/// zeros are stripped so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<cplx> coeffs);
    explicit Poly(std::vector<cplx> coeffs);

    static Poly constant(cplx c) { return Poly{c}; }
    static Poly monomial(std::size_t degree, cplx c = 1.0);
    /// The identity polynomial t.
    static Poly var() { return monomial(1); }

    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    cplx coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : cplx{}; }

    cplx operator()(cplx t) const noexcept;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(cplx s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator-(Poly p) { return p *= -1.0; }
    friend Poly operator*(Poly p, cplx s) { return p *= s; }
    friend Poly operator*(cplx s, Poly p) { return p *= s; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize();

    std::vector<cplx> coeffs_;
};

cplx poly_eval(const Poly& p, cplx t) noexcept;

/// Row-major 2x2 polynomial matrix [[a, b], [c, d]] acting on values by the
/// linear-fractional map g -> (a g + b) / (c g + d).
struct PolyMatrix2 {
    Poly a, b, c, d;

    static PolyMatrix2 identity();
    /// [[0, 1], [1, 0]]: g -> 1/g.
    static PolyMatrix2 reciprocal();

    Poly det() const { return a * d - b * c; }
    PolyMatrix2 adjugate() const { return {d, -b, -c, a}; }
    PolyMatrix2 scaled(cplx s) const { return {a * s, b * s, c * s, d * s}; }

    friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;
};

PolyMatrix2 matmul2(const PolyMatrix2& m, const PolyMatrix2& n);
inline PolyMatrix2 operator*(const PolyMatrix2& m, const PolyMatrix2& n) { return matmul2(m, n); }

/// (a(t) g + b(t)) / (c(t) g + d(t)). Throws Errc::denominator_vanishes when
/// |c(t) g + d(t)| <= kDenominatorTol (1 + |a(t) g + b(t)|).
cplx homography_apply(const PolyMatrix2& m, cplx g, cplx t);

}  // namespace orth
