#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "orth/fixtures.hpp"
#include "orth/io.hpp"
#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/spectral.hpp"

namespace orth {

/// Seeded generator of admissible inputs. Verblunsky coefficients are drawn
/// uniformly from (-bound, bound); recurrences are their Geronimus images,
/// so every sample is supported in [-1, 1]. Draws use raw 64-bit output, so
/// a seed reproduces the same stream on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    std::size_t index(std::size_t lo, std::size_t hi);  ///< inclusive
    std::vector<double> reals(std::size_t n, double lo, double hi);
    RealVerblunsky alpha(std::size_t count, double bound = 0.9);
    /// Complex coefficients with modulus below `bound`.
    VerblunskySeq complex_alpha(std::size_t count, double bound = 0.9);
    RealRecurrence recurrence(std::size_t levels, double bound = 0.9);

private:
    std::mt19937_64 engine_;
};

/// det(x I - J_N) by cofactor expansion, N <= 8.
cplx characteristic_det(const JacobiMatrix& j, cplx x);

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::string precision = "double";
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;
    /// Informational lines: double-precision residuals of checks run in
    /// extended precision, structured discrepancy entries, and so on.
    std::vector<std::string> info;

    bool passed() const;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    /// Replaces every property tolerance when set.
    std::optional<double> tol;
    std::size_t depth = kDefaultDepth;
};

const std::vector<std::string>& suite_names();

/// Errc::unknown_suite for names outside suite_names().
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

/// One line per property and info entry, stable across runs.
std::string format_report(const SuiteReport& report);
io::json report_to_json(const SuiteReport& report);

}  // namespace orth
