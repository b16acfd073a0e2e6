#include "orth/verify.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "orth/compare.hpp"
#include "orth/perturb.hpp"
#include "orth/szego.hpp"

namespace orth {

// ------------------------------------------------------------------ sampling

double Sampler::uniform(double lo, double hi)
{
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::size_t Sampler::index(std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

std::vector<double> Sampler::reals(std::size_t n, double lo, double hi)
{
    std::vector<double> out(n);
    for (auto& x : out)
        x = uniform(lo, hi);
    return out;
}

RealVerblunsky Sampler::alpha(std::size_t count, double bound)
{
    return RealVerblunsky(reals(count, -bound, bound));
}

VerblunskySeq Sampler::complex_alpha(std::size_t count, double bound)
{
    std::vector<cplx> out(count);
    for (auto& a : out) {
        const double r = bound * std::sqrt(uniform(0.0, 1.0));
        a = std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
    }
    return VerblunskySeq(std::move(out));
}

RealRecurrence Sampler::recurrence(std::size_t levels, double bound)
{
    return geronimus_forward(alpha(2 * levels, bound), levels);
}

cplx characteristic_det(const JacobiMatrix& j, cplx x)
{
    const std::size_t n = j.order();
    if (n > 8)
        throw Error(Errc::invalid_spec, "cofactor determinant limited to N <= 8");
    std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = (r == c ? x : cplx(0.0)) - j.at(r, c);
    std::function<cplx(const std::vector<std::vector<cplx>>&)> det = [&](const auto& a) -> cplx {
        const std::size_t size = a.size();
        if (size == 0)
            return 1.0;
        if (size == 1)
            return a[0][0];
        cplx sum = 0.0;
        for (std::size_t c = 0; c < size; ++c) {
            if (a[0][c] == cplx(0.0))
                continue;
            std::vector<std::vector<cplx>> minor;
            for (std::size_t r = 1; r < size; ++r) {
                std::vector<cplx> row;
                for (std::size_t cc = 0; cc < size; ++cc)
                    if (cc != c)
                        row.push_back(a[r][cc]);
                minor.push_back(std::move(row));
            }
            sum += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * det(minor);
        }
        return sum;
    };
    return det(m);
}

// ------------------------------------------------------------------ reports

bool SuiteReport::passed() const
{
    for (const auto& p : properties)
        if (!p.passed)
            return false;
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"roundtrip", "rel",    "bridge", "transfer",
                                                "conjugation", "theorems", "lu",  "discrepancy"};
    return names;
}

namespace {

std::string sci(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

using XRec = BasicRecurrence<extended>;
using XAlpha = BasicRealVerblunsky<extended>;
using XV = BasicVSeq<extended>;

/// Accumulates the worst residual of one property.
class Check {
public:
    Check(SuiteReport& report, std::string name, double tol, const VerifyOptions& options,
          std::string precision = "double")
        : report_(report)
    {
        result_.name = std::move(name);
        result_.tolerance = options.tol.value_or(tol);
        result_.precision = std::move(precision);
    }
    Check(const Check&) = delete;
    Check& operator=(const Check&) = delete;
    ~Check() { finish(); }

    void add(double residual)
    {
        ++result_.cases;
        if (std::isnan(residual))
            nan_ = true;
        else
            result_.max_residual = std::max(result_.max_residual, residual);
    }

    void fail(const std::string& why)
    {
        ++result_.cases;
        failed_ = true;
        if (result_.note.empty())
            result_.note = why;
    }

    /// Runs one case, turning library errors into a failed case.
    template <typename F>
    void run(F&& f)
    {
        try {
            add(f());
        }
        catch (const Error& e) {
            fail(e.what());
        }
    }

    void note(std::string text) { result_.note = std::move(text); }

    void finish()
    {
        if (done_)
            return;
        done_ = true;
        if (nan_) {
            result_.max_residual = std::numeric_limits<double>::quiet_NaN();
            if (result_.note.empty())
                result_.note = "NaN residual";
        }
        result_.passed = !failed_ && !nan_ && result_.cases > 0 && result_.max_residual <= result_.tolerance;
        report_.properties.push_back(std::move(result_));
    }

private:
    SuiteReport& report_;
    PropertyResult result_;
    bool failed_ = false;
    bool nan_ = false;
    bool done_ = false;
};

/// Worst value over the cases of an informational, non-asserted measurement.
struct Tally {
    double worst = 0.0;
    void add(double v) { worst = std::isnan(v) || std::isnan(worst) ? std::numeric_limits<double>::quiet_NaN()
                                                                     : std::max(worst, v); }
};

void info(SuiteReport& r, const std::string& name, const std::string& text)
{
    r.info.push_back(name + ": " + text);
}

void double_info(SuiteReport& r, const std::string& name, const Tally& t)
{
    info(r, name, "double-precision residual " + sci(t.worst) +
                      " (not asserted; the inverse map amplifies rounding, the property above runs in extended precision)");
}

XAlpha to_ext(const RealVerblunsky& a)
{
    return precision_cast<extended>(a);
}

/// Szegő image of rc computed in extended precision and rounded once.
RealVerblunsky inverse_via_extended(const RealRecurrence& rc, std::size_t n)
{
    return precision_cast<double>(geronimus_inverse(precision_cast<extended>(rc), n));
}

RealVerblunsky slice(const RealVerblunsky& a, std::size_t from)
{
    return RealVerblunsky(std::vector<double>(a.values().begin() + static_cast<std::ptrdiff_t>(from), a.values().end()));
}

RealVerblunsky joined(const std::vector<double>& head, const RealVerblunsky& tail)
{
    std::vector<double> out = head;
    out.insert(out.end(), tail.values().begin(), tail.values().end());
    return RealVerblunsky(std::move(out));
}

std::vector<double> head_b(const RealRecurrence& rc, std::size_t k)
{
    return {rc.b_values().begin(), rc.b_values().begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<double> head_d(const RealRecurrence& rc, std::size_t k)
{
    return {rc.d_values().begin(), rc.d_values().begin() + static_cast<std::ptrdiff_t>(k)};
}

const std::array<double, 5> kLineX{1.5, -1.5, 2.0, -2.0, 3.0};
const std::array<cplx, 5> kDiscZ{cplx(0.1, 0.0), cplx(-0.35, 0.0), cplx(0.0, 0.5), cplx(0.3, 0.3), cplx(-0.2, -0.4)};
const std::array<cplx, 5> kConjZ{cplx(0.2, 0.0), cplx(-0.3, 0.0), cplx(0.25, 0.2), cplx(-0.1, 0.35), cplx(0.45, 0.0)};

constexpr double kRoundtripTol = 1e-11;
constexpr double kFixtureTol = 1e-12;
constexpr double kRelTol = 1e-10;
constexpr double kConvergentTol = 1e-8;
constexpr double kClosedFormTol = 1e-9;
constexpr double kTheoremTol = 1e-10;
constexpr double kLuTol = 1e-12;
constexpr double kPathTol = 1e-11;

// ---------------------------------------------------------------- roundtrip

void suite_roundtrip(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    constexpr std::size_t depth = 20;
    constexpr std::size_t trials = 100;
    const RealVerblunsky zeros(std::vector<double>(24, 0.0));
    const RealVerblunsky u_alpha(chebyshev_u_alpha(24));

    {
        Check c(r, "chebyshev_t_forward", kFixtureTol, o);
        c.run([&] { return max_scaled_diff(geronimus_forward(zeros, 12), chebyshev_t_recurrence(12)); });
    }
    {
        Check c(r, "chebyshev_t_inverse", kFixtureTol, o);
        c.run([&] { return max_scaled_diff(geronimus_inverse(chebyshev_t_recurrence(12), 12), zeros); });
    }
    {
        Check c(r, "chebyshev_u_forward", kFixtureTol, o);
        c.run([&] { return max_scaled_diff(geronimus_forward(u_alpha, 12), chebyshev_u_recurrence(12)); });
    }
    {
        Check c(r, "chebyshev_u_inverse", kFixtureTol, o);
        c.run([&] { return max_scaled_diff(geronimus_inverse(chebyshev_u_recurrence(12), 12), u_alpha); });
    }

    std::vector<RealVerblunsky> inputs;
    for (std::size_t t = 0; t < trials; ++t)
        inputs.push_back(s.alpha(2 * depth));

    {
        Check c(r, "forward_of_inverse_identity", kRoundtripTol, o);
        for (const auto& a : inputs)
            c.run([&] {
                const RealRecurrence rc = geronimus_forward(a, depth);
                return max_scaled_diff(geronimus_forward(geronimus_inverse(rc, depth), depth), rc);
            });
    }
    {
        Check c(r, "inverse_of_forward_identity", kRoundtripTol, o, "extended");
        Tally dbl;
        for (const auto& a : inputs) {
            c.run([&] {
                const XAlpha x = to_ext(a);
                return max_scaled_diff(geronimus_inverse(geronimus_forward(x, depth), depth), x);
            });
            try {
                dbl.add(max_scaled_diff(geronimus_inverse(geronimus_forward(a, depth), depth), a));
            }
            catch (const Error&) {
                dbl.add(std::numeric_limits<double>::infinity());
            }
        }
        c.finish();
        double_info(r, "inverse_of_forward_identity", dbl);
    }
    {
        Check c(r, "alpha_v_roundtrip", kRoundtripTol, o, "extended");
        Tally dbl;
        for (const auto& a : inputs) {
            c.run([&] {
                const XAlpha x = to_ext(a);
                return max_scaled_diff(alpha_from_v(v_from_alpha(x, 2 * depth), 2 * depth), x);
            });
            try {
                dbl.add(max_scaled_diff(alpha_from_v(v_from_alpha(a, 2 * depth), 2 * depth), a));
            }
            catch (const Error&) {
                dbl.add(std::numeric_limits<double>::infinity());
            }
        }
        c.finish();
        double_info(r, "alpha_v_roundtrip", dbl);
    }
    {
        // b = 0 exactly when every even-index alpha is 0, in both directions.
        Check c(r, "b_zero_iff_even_alpha_zero", 0.0, o);
        for (std::size_t t = 0; t < 20; ++t) {
            c.run([&] {
                std::vector<double> a = s.reals(2 * depth, -0.9, 0.9);
                for (std::size_t j = 0; j < a.size(); j += 2)
                    a[j] = 0.0;
                const RealRecurrence rc = geronimus_forward(RealVerblunsky(a), depth);
                double worst = 0.0;
                for (const double b : rc.b_values())
                    worst = std::max(worst, std::abs(b));
                const RealVerblunsky back = geronimus_inverse(rc, depth);
                for (std::size_t j = 0; j < back.size(); j += 2)
                    worst = std::max(worst, std::abs(back[j]));
                // A generic sequence must not produce b = 0.
                const RealRecurrence generic = geronimus_forward(s.alpha(2 * depth), depth);
                for (const double b : generic.b_values())
                    if (b == 0.0)
                        worst = std::numeric_limits<double>::infinity();
                return worst;
            });
        }
    }
}

// ---------------------------------------------------------------------- rel

void suite_rel(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    {
        Check c(r, "rel_chebyshev_fixtures", kRelTol, o);
        const std::vector<double> zeros(16, 0.0);
        c.run([&] { return check_rel(chebyshev_t_recurrence(8), as_complex(zeros), 1, std::numbers::pi / 3.0); });
        c.run([&] { return check_rel(chebyshev_t_recurrence(8), as_complex(zeros), 0, 0.7); });
        c.run([&] { return check_rel(chebyshev_u_recurrence(8), as_complex(chebyshev_u_alpha(16)), 2, 1.1); });
    }
    {
        Check c(r, "rel_random", kRelTol, o);
        for (std::size_t t = 0; t < 50; ++t) {
            const RealVerblunsky a = s.alpha(14);
            const std::size_t n = s.index(0, 6);
            const double theta = s.uniform(0.0, std::numbers::pi);
            c.run([&] { return check_rel(geronimus_forward(a, 7), as_complex(a.values()), n, theta); });
        }
    }
}

// ------------------------------------------------------------------- bridge

void suite_bridge(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    const std::size_t depth = o.depth;
    const double sqrt3 = std::sqrt(3.0);
    {
        Check c(r, "closed_forms", kClosedFormTol, o);
        c.run([&] { return std::abs(s_convergent({chebyshev_t_recurrence(30), 30}, 2.0) - 1.0 / sqrt3); });
        c.run([&] { return std::abs(s_convergent({chebyshev_u_recurrence(30), 30}, 2.0) - 2.0 * (2.0 - sqrt3)); });
        c.run([&] { return std::abs(f_convergent({as_complex(chebyshev_u_alpha(30)), 30}, 0.3) - 0.91); });
        c.run([&] { return std::abs(f_convergent({as_complex(std::vector<double>(7, 0.0)), 7}, cplx(0.2, 0.6)) - 1.0); });
    }
    {
        Check c(r, "bridge_chebyshev", kClosedFormTol, o);
        const std::size_t n = std::max<std::size_t>(depth, 1);
        c.run([&] {
            return fs_bridge_check(chebyshev_t_recurrence(n), as_complex(std::vector<double>(2 * n, 0.0)), 2.0, n);
        });
        c.run([&] { return fs_bridge_check(chebyshev_u_recurrence(n), as_complex(chebyshev_u_alpha(2 * n)), 2.0, n); });
    }
    {
        Check c(r, "bridge_random", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky a = s.alpha(2 * depth);
            const RealRecurrence rc = geronimus_forward(a, depth);
            for (const double x : kLineX)
                c.run([&] { return fs_bridge_check(rc, as_complex(a.values()), x, depth); });
        }
    }
    {
        Check c(r, "convergent_stability", kClosedFormTol, o);
        for (std::size_t t = 0; t < 10; ++t) {
            const RealVerblunsky a = s.alpha(2 * (depth + 10));
            const RealRecurrence rc = geronimus_forward(a, depth + 10);
            const VerblunskySeq vs = as_complex(a.values());
            for (const double x : {1.5, -1.5, 2.0})
                c.run([&] { return std::abs(s_convergent({rc, depth}, x) - s_convergent({rc, depth + 10}, x)); });
            for (const cplx z : kDiscZ)
                c.run([&] { return std::abs(f_convergent({vs, depth}, z) - f_convergent({vs, depth + 10}, z)); });
        }
    }
    {
        Check c(r, "f_at_zero_is_one", 0.0, o);
        for (std::size_t t = 0; t < 10; ++t) {
            const VerblunskySeq vs = s.complex_alpha(12);
            for (std::size_t d = 1; d <= 12; ++d)
                c.run([&] { return std::abs(f_convergent({vs, d}, 0.0) - 1.0); });
        }
    }
}

// ----------------------------------------------------------------- transfer

void suite_transfer(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    const std::size_t depth = o.depth;
    {
        Check c(r, "B1_chebyshev_t", kClosedFormTol, o);
        c.run([&] {
            const PolyMatrix2 b = matrix_B_assoc(chebyshev_t_recurrence(2), 1);
            const cplx st = 1.0 / std::sqrt(3.0);
            return std::abs(homography_apply(b, st, 2.0) - 2.0 * (2.0 - std::sqrt(3.0)));
        });
    }
    {
        Check c(r, "upsilon_trivial_cases", 0.0, o);
        c.run([&] {
            const PolyMatrix2 y0 = matrix_Upsilon_assoc(s.complex_alpha(3), 0);
            return y0 == PolyMatrix2::identity().scaled(2.0) ? 0.0 : 1.0;
        });
        c.run([&] {
            const PolyMatrix2 y2 = matrix_Upsilon_assoc(as_complex(std::vector<double>(4, 0.0)), 2);
            return std::abs(homography_apply(y2, 1.0, cplx(0.3, 0.2)) - 1.0);
        });
    }
    {
        Check c(r, "B_assoc", kConvergentTol, o);
        Check nd(r, "B_assoc_nondegenerate", 0.0, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealRecurrence rc = s.recurrence(depth + 3);
            for (std::size_t k = 1; k <= 3; ++k) {
                const PolyMatrix2 m = matrix_B_assoc(rc, k);
                const SFunctionHandle orig{rc, depth}, shifted{shift_coefficients(rc, k), depth};
                nd.add(std::abs(m.det()(2.5)) > 0.0 ? 0.0 : 1.0);
                for (const double x : kLineX)
                    c.run([&] { return std::abs(homography_apply(m, s_convergent(orig, x), x) - s_convergent(shifted, x)); });
            }
        }
    }
    {
        Check c(r, "B_antiassoc", kConvergentTol, o);
        Check nd(r, "B_antiassoc_nondegenerate", 0.0, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealRecurrence full = s.recurrence(depth + 3);
            for (std::size_t k = 1; k <= 3; ++k) {
                const RealRecurrence rc = shift_coefficients(full, k);
                const std::vector<double> pb = head_b(full, k), pd = head_d(full, k);
                const PolyMatrix2 m = matrix_B_antiassoc(rc, pb, pd);
                const SFunctionHandle orig{rc, depth}, tilde{full, depth};
                nd.add(std::abs(m.det()(2.5)) > 0.0 ? 0.0 : 1.0);
                for (const double x : kLineX)
                    c.run([&] { return std::abs(homography_apply(m, s_convergent(orig, x), x) - s_convergent(tilde, x)); });
            }
        }
    }
    {
        Check c(r, "Upsilon_assoc", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const VerblunskySeq vs = t % 2 == 0 ? s.complex_alpha(depth + 3) : as_complex(s.alpha(depth + 3).values());
            for (std::size_t k = 1; k <= 3; ++k) {
                const PolyMatrix2 m = matrix_Upsilon_assoc(vs, k);
                const CFunctionHandle orig{vs, depth}, shifted{shift_verblunsky(vs, k), depth};
                for (const cplx z : kDiscZ)
                    c.run([&] { return std::abs(homography_apply(m, f_convergent(orig, z), z) - f_convergent(shifted, z)); });
            }
        }
    }
    {
        Check c(r, "Upsilon_antiassoc", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const VerblunskySeq vs = s.complex_alpha(depth);
            for (std::size_t k = 1; k <= 3; ++k) {
                const VerblunskySeq xi = t % 2 == 0 ? s.complex_alpha(k) : as_complex(s.alpha(k).values());
                const PolyMatrix2 m = matrix_Upsilon_antiassoc(vs, xi.values());
                const CFunctionHandle orig{vs, depth}, tilde{prepend_verblunsky(vs, xi.values()), depth};
                for (const cplx z : kDiscZ)
                    c.run([&] { return std::abs(homography_apply(m, f_convergent(orig, z), z) - f_convergent(tilde, z)); });
            }
        }
    }
}

// -------------------------------------------------------------- conjugation

void suite_conjugation(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    const std::size_t depth = o.depth;
    {
        Check c(r, "identity_matrix", 0.0, o);
        const VerblunskySeq vs = s.complex_alpha(depth);
        const CFunctionHandle h{vs, depth};
        for (const cplx z : kConjZ)
            c.run([&] { return szego_conjugate_check(PolyMatrix2::identity(), h, h, z); });
    }
    {
        Check c(r, "B1_chebyshev_t_closed_form", kConvergentTol, o);
        const PolyMatrix2 b1 = matrix_B_assoc(chebyshev_t_recurrence(2), 1);
        c.run([&] {
            return szego_conjugate_check(
                b1, Side::line, [](cplx) { return cplx(1.0); }, [](cplx z) { return 1.0 - z * z; }, 0.2);
        });
    }
    {
        Check c(r, "Upsilon2_chebyshev_u", kConvergentTol, o);
        const PolyMatrix2 y2 = matrix_Upsilon_assoc(as_complex(chebyshev_u_alpha(4)), 2);
        std::vector<double> dhat(depth, 0.25);
        dhat[0] = 1.0 / 3.0;
        const SFunctionHandle shifted{RealRecurrence(std::vector<double>(depth, 0.0), dhat), depth};
        c.run([&] {
            return szego_conjugate_check(
                y2, Side::circle, [](cplx x) { return 2.0 * (x - std::sqrt(x * x - 1.0)); },
                [&](cplx x) { return s_convergent(shifted, x); }, map_x_to_z(2.0));
        });
    }
    {
        Check c(r, "B_assoc", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky a = s.alpha(2 * (depth + 3));
            const RealRecurrence rc = geronimus_forward(a, depth + 3);
            for (std::size_t k = 1; k <= 3; ++k) {
                c.run([&] {
                    const RealVerblunsky shifted = inverse_via_extended(shift_coefficients(rc, k), depth);
                    const CFunctionHandle orig{as_complex(a.values()), 2 * depth}, tr{as_complex(shifted.values()), 2 * depth};
                    double worst = 0.0;
                    for (const cplx z : kConjZ)
                        worst = std::max(worst, szego_conjugate_check(matrix_B_assoc(rc, k), orig, tr, z));
                    return worst;
                });
            }
        }
    }
    {
        Check c(r, "B_antiassoc", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky at = s.alpha(2 * (depth + 3));
            const RealRecurrence full = geronimus_forward(at, depth + 3);
            for (std::size_t k = 1; k <= 3; ++k) {
                c.run([&] {
                    const RealRecurrence rc = shift_coefficients(full, k);
                    const RealVerblunsky a = inverse_via_extended(rc, depth);
                    const PolyMatrix2 m = matrix_B_antiassoc(rc, head_b(full, k), head_d(full, k));
                    const CFunctionHandle orig{as_complex(a.values()), 2 * depth}, tr{as_complex(at.values()), 2 * depth};
                    double worst = 0.0;
                    for (const cplx z : kConjZ)
                        worst = std::max(worst, szego_conjugate_check(m, orig, tr, z));
                    return worst;
                });
            }
        }
    }
    {
        Check c(r, "Upsilon_assoc", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky a = s.alpha(2 * depth + 4);
            for (std::size_t k = 1; k <= 3; ++k) {
                c.run([&] {
                    const PolyMatrix2 m = matrix_Upsilon_assoc(as_complex(a.values()), k);
                    const SFunctionHandle orig{geronimus_forward(a, depth), depth};
                    const SFunctionHandle tr{geronimus_forward(slice(a, k), depth), depth};
                    double worst = 0.0;
                    for (const cplx z : kConjZ)
                        worst = std::max(worst, szego_conjugate_check(m, orig, tr, z));
                    return worst;
                });
            }
        }
    }
    {
        Check c(r, "Upsilon_antiassoc", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky a = s.alpha(2 * depth);
            for (std::size_t k = 1; k <= 3; ++k) {
                const std::vector<double> xi = s.reals(k, -0.9, 0.9);
                c.run([&] {
                    const VerblunskySeq xc = as_complex(xi);
                    const PolyMatrix2 m = matrix_Upsilon_antiassoc(as_complex(a.values()), xc.values());
                    const SFunctionHandle orig{geronimus_forward(a, depth), depth};
                    const SFunctionHandle tr{geronimus_forward(joined(xi, a), depth), depth};
                    double worst = 0.0;
                    for (const cplx z : kConjZ)
                        worst = std::max(worst, szego_conjugate_check(m, orig, tr, z));
                    return worst;
                });
            }
        }
    }
    {
        Check c(r, "circle_k2_closed_forms", kConvergentTol, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky a = s.alpha(2 * depth + 2);
            const std::vector<double> xi = s.reals(2, -0.9, 0.9);
            c.run([&] {
                const CFunctionHandle orig{as_complex(a.values()), 2 * depth};
                const CFunctionHandle shifted{as_complex(slice(a, 2).values()), 2 * depth};
                const CFunctionHandle tilde{as_complex(joined(xi, a).values()), 2 * depth};
                const PolyMatrix2 assoc = corollary_circle_assoc_k2(a);
                const PolyMatrix2 anti = corollary_circle_antiassoc_k2(xi[0], xi[1]);
                double worst = 0.0;
                for (const cplx z : kConjZ) {
                    worst = std::max(worst, szego_conjugate_check(assoc, orig, shifted, z));
                    worst = std::max(worst, szego_conjugate_check(anti, orig, tilde, z));
                }
                return worst;
            });
        }
    }
    {
        Check c(r, "corollary_fixtures", kConvergentTol, o);
        for (const Fixture& f : corollary_fixtures()) {
            if (!f.expect_agreement)
                continue;
            c.run([&] {
                double worst = 0.0;
                for (const FixtureRow& row : f.rows(depth))
                    worst = std::max(worst, row.residual);
                return worst;
            });
        }
    }
}

// ----------------------------------------------------------------- theorems

/// Runs `trials` admissible cases of `compare`, which returns the theorem vs
/// oracle deviation; cases where both routes report a support violation are
/// redrawn.
template <typename F>
void theorem_cases(Check& c, std::size_t trials, F&& compare)
{
    std::size_t done = 0;
    for (std::size_t attempt = 0; done < trials && attempt < 20 * trials; ++attempt) {
        try {
            c.add(compare());
            ++done;
        }
        catch (const Error& e) {
            if (e.code() != Errc::support_violation) {
                c.fail(e.what());
                ++done;
            }
        }
    }
    if (done < trials)
        c.fail("too few admissible draws");
}

void suite_theorems(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    constexpr std::size_t n = 12;
    constexpr std::size_t trials = 50;

    {
        Check c(r, "assoc_oprl", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealRecurrence rc = s.recurrence(n + 4);
            const std::size_t k = s.index(0, 4);
            return max_scaled_diff(assoc_oprl_to_verblunsky(rc, k, n, Path::theorem),
                                   assoc_oprl_to_verblunsky(rc, k, n, Path::oracle));
        });
    }
    {
        Check c(r, "antiassoc_oprl", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealRecurrence full = s.recurrence(n + 3);
            const std::size_t k = s.index(1, 3);
            const RealRecurrence rc = shift_coefficients(full, k);
            const std::vector<double> pb = head_b(full, k), pd = head_d(full, k);
            return max_scaled_diff(antiassoc_oprl_to_verblunsky<double>(rc, pb, pd, n, Path::theorem),
                                   antiassoc_oprl_to_verblunsky<double>(rc, pb, pd, n, Path::oracle));
        });
    }
    for (const bool odd : {true, false}) {
        Check c(r, odd ? "assoc_opuc_odd" : "assoc_opuc_even", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealVerblunsky a = s.alpha(2 * n + 8);
            const std::size_t k = odd ? 2 * s.index(0, 2) + 1 : 2 * s.index(0, 2);
            return max_scaled_diff(assoc_opuc_to_recurrence(a, k, n, Path::theorem),
                                   assoc_opuc_to_recurrence(a, k, n, Path::oracle));
        });
    }
    for (const bool odd : {true, false}) {
        Check c(r, odd ? "antiassoc_opuc_odd" : "antiassoc_opuc_even", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealVerblunsky a = s.alpha(2 * n);
            const std::size_t k = odd ? 2 * s.index(0, 2) + 1 : 2 * s.index(1, 2);
            const std::vector<double> xi = s.reals(k, -0.9, 0.9);
            return max_scaled_diff(antiassoc_opuc_to_recurrence<double>(a, xi, n, Path::theorem),
                                   antiassoc_opuc_to_recurrence<double>(a, xi, n, Path::oracle));
        });
    }
    {
        Check c(r, "coprl_verblunsky", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealRecurrence rc = s.recurrence(n);
            const std::size_t k = s.index(0, 3);
            const double lambda = k == 0 ? 1.0 : s.uniform(0.7, 1.3);
            const double tau = s.uniform(-0.1, 0.1);
            return max_scaled_diff(coprl_verblunsky(rc, k, lambda, tau, n, Path::theorem),
                                   coprl_verblunsky(rc, k, lambda, tau, n, Path::oracle));
        });
    }
    {
        Check c(r, "symmetric", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            std::vector<double> a = s.reals(2 * n, -0.9, 0.9);
            for (std::size_t j = 0; j < a.size(); j += 2)
                a[j] = 0.0;
            const std::vector<double> d = geronimus_forward(RealVerblunsky(a), n).d_values();
            return max_scaled_diff(symmetric_verblunsky<double>(d, n, Path::theorem),
                                   symmetric_verblunsky<double>(d, n, Path::oracle));
        });
    }
    {
        Check c(r, "symmetric_codilated", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            std::vector<double> a = s.reals(2 * n, -0.9, 0.9);
            for (std::size_t j = 0; j < a.size(); j += 2)
                a[j] = 0.0;
            const std::vector<double> d = geronimus_forward(RealVerblunsky(a), n).d_values();
            const std::size_t k = s.index(1, 3);
            const double lambda = s.uniform(0.7, 1.3);
            return max_scaled_diff(symmetric_codilated_verblunsky<double>(d, k, lambda, n, Path::theorem),
                                   symmetric_codilated_verblunsky<double>(d, k, lambda, n, Path::oracle));
        });
    }
    {
        Check c(r, "sieve2", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealVerblunsky a = s.alpha(n);
            return max_scaled_diff(sieve2_recurrence(a, n, Path::theorem), sieve2_recurrence(a, n, Path::oracle));
        });
    }
    {
        Check c(r, "sieved_kmod", kTheoremTol, o);
        theorem_cases(c, trials, [&] {
            const RealVerblunsky a = s.alpha(n);
            const std::size_t k = s.index(0, n - 1);
            const double eta = s.uniform(-0.9, 0.9);
            return max_scaled_diff(sieved_kmod_recurrence(a, k, eta, n, Path::theorem),
                                   sieved_kmod_recurrence(a, k, eta, n, Path::oracle));
        });
    }

    {
        // Odd k = 1 on the second-kind pattern, both routes.
        Check c(r, "spot_values_assoc_opuc", kFixtureTol, o);
        const RealVerblunsky u(chebyshev_u_alpha(40));
        for (const Path p : {Path::theorem, Path::oracle}) {
            c.run([&] {
                const RealRecurrence odd = assoc_opuc_to_recurrence(u, 1, 4, p);
                const RealRecurrence even = assoc_opuc_to_recurrence(u, 2, 4, p);
                return std::max({std::abs(odd.b(1) + 0.5), std::abs(odd.d(1) - 3.0 / 8.0),
                                 std::abs(odd.d(2) - 2.0 / 9.0), std::abs(odd.b(2) - 1.0 / 12.0),
                                 std::abs(even.b(1)), std::abs(even.d(1) - 1.0 / 3.0), std::abs(even.d(2) - 0.25)});
            });
        }
    }
    {
        Check c(r, "spot_values_coprl", kFixtureTol, o);
        const RealRecurrence t = chebyshev_t_recurrence(12);
        c.run([&] {
            return max_scaled_diff(coprl_verblunsky(t, 1, 0.5, 0.0, 12), RealVerblunsky(chebyshev_u_alpha(24)));
        });
        c.run([&] {
            return max_scaled_diff(symmetric_codilated_verblunsky<double>(t.d_values(), 1, 0.5, 12),
                                   RealVerblunsky(chebyshev_u_alpha(24)));
        });
        c.run([&] {
            try {
                coprl_verblunsky(t, 1, 2.0, 0.0, 12);
            }
            catch (const Error& e) {
                return e.code() == Errc::support_violation && e.index() == 1u ? 0.0 : 1.0;
            }
            return 1.0;
        });
    }
    {
        // Deviation at lambda = 1 +- eps, tau = +-eps is O(eps) with a modest
        // constant on the Chebyshev data.
        Check c(r, "continuity_chebyshev", 1e-6, o);
        for (const RealRecurrence& rc : {chebyshev_t_recurrence(n), chebyshev_u_recurrence(n)}) {
            const RealVerblunsky base = geronimus_inverse(rc, n);
            for (const std::size_t k : {1u, 2u, 3u})
                for (const double eps : {1e-8, -1e-8}) {
                    c.run([&] { return max_scaled_diff(coprl_verblunsky(rc, k, 1.0 + eps, 0.0, n), base); });
                    c.run([&] { return max_scaled_diff(coprl_verblunsky(rc, k, 1.0, eps, n), base); });
                }
        }
    }
    {
        // On generic inputs the constant is the derivative of the inverse map,
        // which reaches 1e5 at this depth. The check is that the deviation is
        // exactly first order: shrinking eps 128-fold shrinks it 128-fold.
        Check c(r, "continuity_first_order", 1e-3, o, "extended");
        Tally raw;
        theorem_cases(c, 20, [&] {
            const XRec rc = precision_cast<extended>(s.recurrence(n));
            const XAlpha base = geronimus_inverse(rc, n);
            const std::size_t k = s.index(1, 3);
            double worst = 0.0;
            for (const double sign : {1.0, -1.0})
                for (const bool dilate : {true, false}) {
                    auto dev = [&](double eps) {
                        const double lam = dilate ? 1.0 + sign * eps : 1.0;
                        const double tau = dilate ? 0.0 : sign * eps;
                        return static_cast<double>(max_scaled_diff(coprl_verblunsky(rc, base, k, lam, tau, n), base));
                    };
                    raw.add(dev(1e-8));
                    // Powers of two keep 1 + eps exact in the double lambda argument.
                    const double big = dev(0x1.0p-40);
                    worst = std::max(worst, std::abs(big / (128.0 * dev(0x1.0p-47)) - 1.0));
                }
            return worst;
        });
        c.finish();
        info(r, "continuity_first_order", "largest deviation at eps = 1e-8 on random inputs " + sci(raw.worst));
    }
    {
        // Indices below 2k - 1 are untouched; index 2k - 1 moves when lambda != 1.
        Check c(r, "coprl_prefix_preserved", 0.0, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealRecurrence rc = s.recurrence(n);
            const std::size_t k = s.index(1, 3);
            const double lambda = s.uniform(0.8, 0.95);
            c.run([&] {
                const RealVerblunsky base = geronimus_inverse(rc, n);
                const RealVerblunsky hat = coprl_verblunsky(rc, base, k, lambda, 0.0, n);
                double bad = 0.0;
                for (std::size_t j = 0; j + 1 < 2 * k; ++j)
                    if (hat[j] != base[j])
                        bad += 1.0;
                if (hat[2 * k - 1] == base[2 * k - 1])
                    bad += 1.0;
                return bad;
            });
        }
    }
    {
        Check c(r, "kmod_changes_one_entry", 0.0, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const VerblunskySeq vs = s.complex_alpha(n);
            const std::size_t k = s.index(0, n - 1);
            const cplx eta = s.complex_alpha(1)[0];
            c.run([&] {
                const VerblunskySeq beta = copuc_apply(vs, k, eta);
                std::size_t changed = 0;
                for (std::size_t j = 0; j < n; ++j)
                    changed += beta[j] != vs[j];
                const bool restored = copuc_apply(beta, k, vs[k]) == vs;
                return std::abs(static_cast<double>(changed) - 1.0) + (restored ? 0.0 : 1.0);
            });
        }
    }
    {
        Check c(r, "sieved_kmod_changes_two_entries", 0.0, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const RealVerblunsky a = s.alpha(n);
            const std::size_t k = s.index(0, n - 3);
            const double eta = s.uniform(-0.9, 0.9);
            c.run([&] {
                const RealRecurrence base = sieve2_recurrence(a, n);
                const RealRecurrence mod = sieved_kmod_recurrence(a, k, eta, n);
                std::size_t changed = 0;
                for (std::size_t j = 1; j <= n; ++j)
                    changed += (mod.d(j) != base.d(j)) + (mod.b(j) != 0.0);
                return std::abs(static_cast<double>(changed) - 2.0);
            });
        }
    }
}

// ----------------------------------------------------------------------- lu

void suite_lu(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    {
        Check c(r, "lu_factorization", kLuTol, o);
        c.run([&] {
            const RealRecurrence t = chebyshev_t_recurrence(4);
            return lu_check(t, v_from_recurrence(t, 4), 4).max_abs_diff;
        });
        for (std::size_t t = 0; t < 50; ++t) {
            const std::size_t order = s.index(1, 8);
            const RealRecurrence rc = s.recurrence(order);
            c.run([&] {
                const LuReport rep = lu_check(rc, v_from_recurrence(rc, order), order);
                return rep.ok ? rep.max_abs_diff : std::numeric_limits<double>::infinity();
            });
        }
    }
    {
        Check c(r, "lu_detects_corruption", 0.0, o);
        for (std::size_t t = 0; t < 10; ++t) {
            const RealRecurrence rc = s.recurrence(6);
            const std::size_t slot = s.index(0, 10);
            c.run([&] {
                std::vector<double> v = v_from_recurrence(rc, 6).values();
                v[slot] += 1e-3;
                const LuReport rep = lu_check(rc, VSeq(v), 6);
                return !rep.ok && rep.worst ? 0.0 : 1.0;
            });
        }
    }
    {
        Check c(r, "characteristic_polynomial", 1e-10, o);
        for (std::size_t t = 0; t < 20; ++t) {
            const std::size_t order = s.index(1, 8);
            const RealRecurrence rc = s.recurrence(order);
            const cplx x(s.uniform(-1.5, 1.5), s.uniform(-0.5, 0.5));
            c.run([&] {
                const cplx p = oprl_eval(rc, order, x)[order];
                return scaled_diff(characteristic_det(jacobi_matrix(rc, order), x), p);
            });
        }
    }
    {
        Check c(r, "v_identities", kPathTol, o);
        for (std::size_t t = 0; t < 50; ++t) {
            const RealVerblunsky a = s.alpha(16);
            c.run([&] {
                const VSeq v = v_from_alpha(a, 16);
                const RealRecurrence rc = geronimus_forward(a, 8);
                double worst = 0.0;
                for (std::size_t k = 0; k < 8; ++k) {
                    worst = std::max(worst, scaled_diff(v[2 * k] * v[2 * k + 1], rc.d(k + 1)));
                    worst = std::max(worst, scaled_diff(v.ext(static_cast<std::ptrdiff_t>(2 * k) - 1) + v[2 * k],
                                                        rc.b(k + 1) + 1.0));
                }
                return worst;
            });
        }
    }
    for (const std::size_t levels : {std::size_t{8}, std::size_t{20}}) {
        const std::string suffix = "_depth" + std::to_string(levels);
        {
            Check c(r, "v_path_independence" + suffix, kPathTol, o, "extended");
            Tally dbl;
            for (std::size_t t = 0; t < 50; ++t) {
                const RealVerblunsky a = s.alpha(2 * levels);
                c.run([&] {
                    const XAlpha x = to_ext(a);
                    return max_scaled_diff(v_from_recurrence(geronimus_forward(x, levels), levels),
                                           v_from_alpha(x, 2 * levels));
                });
                dbl.add(max_scaled_diff(v_from_recurrence(geronimus_forward(a, levels), levels),
                                        v_from_alpha(a, 2 * levels)));
            }
            c.finish();
            double_info(r, "v_path_independence" + suffix, dbl);
        }
        {
            Check c(r, "alpha_path_independence" + suffix, kPathTol, o, "extended");
            Tally dbl;
            for (std::size_t t = 0; t < 50; ++t) {
                const RealRecurrence rc = s.recurrence(levels);
                c.run([&] {
                    const XRec x = precision_cast<extended>(rc);
                    return max_scaled_diff(alpha_from_v(v_from_recurrence(x, levels), 2 * levels),
                                           geronimus_inverse(x, levels));
                });
                try {
                    dbl.add(max_scaled_diff(alpha_from_v(v_from_recurrence(rc, levels), 2 * levels),
                                            geronimus_inverse(rc, levels)));
                }
                catch (const Error&) {
                    dbl.add(std::numeric_limits<double>::infinity());
                }
            }
            c.finish();
            double_info(r, "alpha_path_independence" + suffix, dbl);
        }
    }
    {
        Check c(r, "perturbed_v_fixture", kFixtureTol, o);
        const RealRecurrence t = chebyshev_t_recurrence(8);
        for (const LuVariant variant : {LuVariant::consistent, LuVariant::stated}) {
            c.run([&] {
                const VSeq v = perturbed_v(t, 1, 1.0, 0.1, 8, variant);
                return std::max(std::abs(v[2] - 0.6), std::abs(v[3] - 5.0 / 12.0));
            });
        }
        c.run([&] {
            const VSeq v = perturbed_v(t, 1, 0.5, 0.0, 8);
            return max_scaled_diff(v, v_from_alpha(RealVerblunsky(chebyshev_u_alpha(16)), 16));
        });
    }
    {
        Check c(r, "lu_alpha_matches_coprl_lambda1", kPathTol, o);
        theorem_cases(c, 50, [&] {
            const RealRecurrence rc = s.recurrence(12);
            const std::size_t k = s.index(0, 3);
            const double tau = s.uniform(-0.1, 0.1);
            return max_scaled_diff(perturbed_alpha_lu(rc, k, 1.0, tau, 12, LuVariant::stated),
                                   coprl_verblunsky(rc, k, 1.0, tau, 12));
        });
    }
    {
        Check c(r, "lu_alpha_consistent_matches_coprl", kTheoremTol, o);
        theorem_cases(c, 50, [&] {
            const RealRecurrence rc = s.recurrence(12);
            const std::size_t k = s.index(1, 3);
            const double lambda = s.uniform(0.7, 1.3);
            const double tau = s.uniform(-0.1, 0.1);
            return max_scaled_diff(perturbed_alpha_lu(rc, k, lambda, tau, 12), coprl_verblunsky(rc, k, lambda, tau, 12));
        });
    }
    {
        Check c(r, "discrepancy_reported", kFixtureTol, o);
        c.run([&] {
            const LuDiscrepancyReport rep = lu_discrepancy(chebyshev_t_recurrence(10), 1, 0.5, 0.0, 10);
            for (const auto& e : rep.entries)
                if (e.quantity == "v" && e.index == 1)
                    return std::abs(e.consistent - 0.25) + std::abs(e.stated - 0.5);
            return std::numeric_limits<double>::infinity();
        });
    }
}

// -------------------------------------------------------------- discrepancy

void describe(SuiteReport& r, const std::string& label, const LuDiscrepancyReport& rep)
{
    info(r, label,
         "k=" + std::to_string(rep.k) + " lambda=" + io::format_double(rep.lambda) + " tau=" +
             io::format_double(rep.tau) + " max|dv|=" + sci(rep.max_v_diff) + " max|dalpha|=" +
             sci(rep.max_alpha_diff) +
             (rep.stated_alpha_breakdown ? " stated alpha leaves (-1,1) at index " + std::to_string(*rep.stated_alpha_breakdown)
                                        : std::string()));
    for (const auto& e : rep.entries)
        info(r, label,
             e.quantity + "[" + std::to_string(e.index) + "] consistent=" + io::format_double(e.consistent) +
                 " stated=" + io::format_double(e.stated));
}

void suite_discrepancy(SuiteReport& r, const VerifyOptions& o)
{
    Sampler s(o.seed);
    const LuDiscrepancyReport fixture = lu_discrepancy(chebyshev_t_recurrence(10), 1, 0.5, 0.0, 10);
    describe(r, "chebyshev_t_k1_lambda0.5", fixture);
    {
        Check c(r, "fixture_v1_mismatch", kFixtureTol, o);
        c.run([&] {
            for (const auto& e : fixture.entries)
                if (e.quantity == "v" && e.index == 1)
                    return std::abs(e.consistent - 0.25) + std::abs(e.stated - 0.5);
            return std::numeric_limits<double>::infinity();
        });
    }
    {
        Check c(r, "agreement_at_lambda1", kPathTol, o);
        theorem_cases(c, 20, [&] {
            const RealRecurrence rc = s.recurrence(12);
            const LuDiscrepancyReport rep = lu_discrepancy(rc, s.index(0, 3), 1.0, s.uniform(-0.1, 0.1), 12);
            return rep.agrees() ? std::max(rep.max_v_diff, rep.max_alpha_diff) : std::numeric_limits<double>::infinity();
        });
    }
    for (std::size_t t = 0; t < 3; ++t) {
        const RealRecurrence rc = s.recurrence(12);
        const std::size_t k = s.index(1, 3);
        const double lambda = s.uniform(0.7, 1.3);
        try {
            describe(r, "random_" + std::to_string(t), lu_discrepancy(rc, k, lambda, 0.0, 12));
        }
        catch (const Error& e) {
            info(r, "random_" + std::to_string(t), std::string("skipped: ") + e.what());
        }
    }
}

}  // namespace

SuiteReport run_suite(std::string_view name, const VerifyOptions& options)
{
    SuiteReport report;
    report.suite = std::string(name);
    report.seed = options.seed;
    if (name == "roundtrip")
        suite_roundtrip(report, options);
    else if (name == "rel")
        suite_rel(report, options);
    else if (name == "bridge")
        suite_bridge(report, options);
    else if (name == "transfer")
        suite_transfer(report, options);
    else if (name == "conjugation")
        suite_conjugation(report, options);
    else if (name == "theorems")
        suite_theorems(report, options);
    else if (name == "lu")
        suite_lu(report, options);
    else if (name == "discrepancy")
        suite_discrepancy(report, options);
    else
        throw Error(Errc::unknown_suite, "unknown suite \"" + std::string(name) + "\"");
    return report;
}

std::string format_report(const SuiteReport& report)
{
    std::string out = "suite " + report.suite + " seed " + std::to_string(report.seed) + "\n";
    std::size_t passed = 0;
    for (const auto& p : report.properties) {
        passed += p.passed;
        char line[512];
        std::snprintf(line, sizeof line, "%s  %-36s %-8s cases=%-4zu max=%-10s tol=%s", p.passed ? "PASS" : "FAIL",
                      p.name.c_str(), p.precision.c_str(), p.cases, sci(p.max_residual).c_str(),
                      sci(p.tolerance).c_str());
        out += line;
        if (!p.note.empty())
            out += "  (" + p.note + ")";
        out += '\n';
    }
    for (const auto& line : report.info)
        out += "INFO  " + line + '\n';
    out += std::to_string(passed) + "/" + std::to_string(report.properties.size()) + " properties passed\n";
    return out;
}

io::json report_to_json(const SuiteReport& report)
{
    io::json props = io::json::array();
    for (const auto& p : report.properties) {
        io::json j = io::json::object();
        j["name"] = p.name;
        j["passed"] = p.passed;
        j["precision"] = p.precision;
        j["cases"] = p.cases;
        j["max_residual"] = p.max_residual;
        j["tolerance"] = p.tolerance;
        if (!p.note.empty())
            j["note"] = p.note;
        props.push_back(std::move(j));
    }
    io::json out = io::json::object();
    out["suite"] = report.suite;
    out["seed"] = report.seed;
    out["passed"] = report.passed();
    out["properties"] = std::move(props);
    out["info"] = report.info;
    return out;
}

}  // namespace orth
