// ortho-szego: coefficient conversion, perturbation pipelines, convergent
// evaluation and the verification suites.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orth/compare.hpp"
#include "orth/io.hpp"
#include "orth/perturb.hpp"
#include "orth/spectral.hpp"
#include "orth/szego.hpp"
#include "orth/verify.hpp"

namespace {

using orth::cplx;
using orth::Errc;
using orth::Error;
namespace io = orth::io;
using json = io::json;

enum Exit : int { ok = 0, input_error = 1, support = 2, spec_mismatch = 3, unknown_suite = 4 };

int exit_code(Errc code)
{
    switch (code) {
    case Errc::support_violation:
    case Errc::outside_domain:
    case Errc::pole_hit:
    case Errc::division_degenerate:
    case Errc::denominator_vanishes:
    case Errc::zero_argument:
        return support;
    case Errc::invalid_spec:
    case Errc::invalid_eta:
    case Errc::invalid_xi:
    case Errc::invalid_prepend:
        return spec_mismatch;
    case Errc::unknown_suite:
        return unknown_suite;
    default:
        return input_error;
    }
}

struct Common {
    std::string in;
    std::string out;
    std::optional<std::size_t> n;
    std::optional<std::size_t> depth;
};

std::size_t default_depth()
{
    const char* env = std::getenv("ORTHO_SZEGO_DEPTH");
    if (!env || !*env)
        return orth::kDefaultDepth;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw Error(Errc::parse_error, "ORTHO_SZEGO_DEPTH must be a positive integer");
    return static_cast<std::size_t>(v);
}

json require_input(const Common& c)
{
    if (c.in.empty())
        throw Error(Errc::parse_error, "--in is required");
    return io::read_file(c.in);
}

orth::Side parse_side(const std::string& s)
{
    return s == "circle" ? orth::Side::circle : orth::Side::line;
}

// ---------------------------------------------------------------- geronimus

int cmd_geronimus(const Common& c, const std::string& direction)
{
    const json in = require_input(c);
    if (direction == "fwd") {
        const orth::RealVerblunsky alpha = io::verblunsky_from_json(in).real_view();
        const std::size_t n = c.n.value_or(alpha.size() / 2);
        io::write_text(c.out, io::dump(io::to_json(orth::geronimus_forward(alpha, n))));
    }
    else {
        const orth::RealRecurrence rc = io::recurrence_from_json(in);
        const std::size_t n = c.n.value_or(rc.levels());
        io::write_text(c.out, io::dump(io::to_json(orth::geronimus_inverse(rc, n))));
    }
    return ok;
}

// ------------------------------------------------------------------ perturb

std::vector<orth::PerturbationSpec> load_specs(const std::string& path, orth::Side side)
{
    if (path.empty())
        throw Error(Errc::parse_error, "--spec is required");
    std::vector<orth::PerturbationSpec> specs = io::specs_from_json(io::read_file(path));
    for (const auto& spec : specs)
        if (!orth::applies_to(spec, side))
            throw Error(Errc::invalid_spec, std::string(orth::kind_name(spec)) + " does not apply to the " +
                                                (side == orth::Side::line ? "line" : "circle") + " side");
    return specs;
}

int perturb_line(const Common& c, const std::vector<orth::PerturbationSpec>& specs, bool both)
{
    orth::RealRecurrence rc = io::recurrence_from_json(require_input(c));
    const std::size_t want = c.n.value_or(rc.levels());
    orth::RealVerblunsky theorem;
    if (both)
        theorem = orth::geronimus_inverse(rc, std::min(want, rc.levels()));

    for (const auto& spec : specs) {
        if (const auto* dil = std::get_if<orth::CoDilated>(&spec)) {
            const orth::PerturbationSpec one[] = {spec};
            const orth::RealRecurrence next = orth::coprl_apply(rc, std::span<const orth::PerturbationSpec>(one));
            if (both)
                theorem = orth::coprl_verblunsky(rc, theorem, dil->k, dil->lambda, 0.0, theorem.size() / 2);
            rc = next;
        }
        else if (const auto* rec = std::get_if<orth::CoRecursive>(&spec)) {
            const orth::PerturbationSpec one[] = {spec};
            const orth::RealRecurrence next = orth::coprl_apply(rc, std::span<const orth::PerturbationSpec>(one));
            if (both)
                theorem = orth::coprl_verblunsky(rc, theorem, rec->k, 1.0, rec->tau, theorem.size() / 2);
            rc = next;
        }
        else if (const auto* as = std::get_if<orth::Associated>(&spec)) {
            const orth::RealRecurrence next = orth::shift_coefficients(rc, as->k);
            if (both)
                theorem = orth::assoc_oprl_to_verblunsky(rc, as->k, std::min(theorem.size() / 2, next.levels()));
            rc = next;
        }
        else if (const auto* anti = std::get_if<orth::AntiAssociated>(&spec)) {
            const orth::RealRecurrence next = orth::prepend_coefficients<double>(rc, anti->b, anti->d);
            if (both)
                theorem = orth::antiassoc_oprl_to_verblunsky<double>(rc, anti->b, anti->d,
                                                                     std::min(want, next.levels()));
            rc = next;
        }
    }

    if (!both) {
        io::write_text(c.out, io::dump(io::to_json(rc)));
        return ok;
    }
    const orth::RealVerblunsky oracle = orth::geronimus_inverse(rc, theorem.size() / 2);
    json out = json::object();
    out["recurrence"] = io::to_json(rc);
    out["theorem"] = io::to_json(theorem);
    out["oracle"] = io::to_json(oracle);
    out["max_deviation"] = orth::max_scaled_diff(theorem, oracle);
    io::write_text(c.out, io::dump(out));
    return ok;
}

int perturb_circle(const Common& c, const std::vector<orth::PerturbationSpec>& specs, bool both)
{
    const orth::VerblunskySeq input = io::verblunsky_from_json(require_input(c));
    orth::VerblunskySeq vs = input;
    for (const auto& spec : specs) {
        if (const auto* km = std::get_if<orth::KModification>(&spec))
            vs = orth::copuc_apply(vs, km->k, km->eta);
        else if (const auto* as = std::get_if<orth::Associated>(&spec))
            vs = orth::shift_verblunsky(vs, as->k);
        else if (const auto* anti = std::get_if<orth::AntiAssociated>(&spec))
            vs = orth::prepend_verblunsky(vs, anti->xi);
        else if (const auto* sv = std::get_if<orth::Sieve>(&spec))
            vs = orth::sieve(vs, sv->ell);
    }
    if (!both) {
        io::write_text(c.out, io::dump(io::to_json(vs)));
        return ok;
    }

    // Closed forms exist on this side for a single associated, anti-associated
    // or ell = 2 sieve step, and for a k-modification followed by that sieve.
    const orth::RealVerblunsky alpha = input.real_view();
    const orth::RealVerblunsky result = vs.real_view();
    const std::size_t levels = c.n.value_or(result.size() / 2);
    orth::RealRecurrence theorem;
    const auto* first = &specs.front();
    if (specs.size() == 1 && std::holds_alternative<orth::Associated>(*first)) {
        theorem = orth::assoc_opuc_to_recurrence(alpha, std::get<orth::Associated>(*first).k, levels);
    }
    else if (specs.size() == 1 && std::holds_alternative<orth::AntiAssociated>(*first)) {
        std::vector<double> xi;
        for (const cplx x : std::get<orth::AntiAssociated>(*first).xi) {
            if (x.imag() != 0.0)
                throw Error(Errc::complex_alpha, "closed forms need real xi");
            xi.push_back(x.real());
        }
        theorem = orth::antiassoc_opuc_to_recurrence<double>(alpha, xi, levels);
    }
    else if (specs.size() == 1 && std::holds_alternative<orth::Sieve>(*first) &&
             std::get<orth::Sieve>(*first).ell == 2) {
        theorem = orth::sieve2_recurrence(alpha, levels);
    }
    else if (specs.size() == 2 && std::holds_alternative<orth::KModification>(specs[0]) &&
             std::holds_alternative<orth::Sieve>(specs[1]) && std::get<orth::Sieve>(specs[1]).ell == 2) {
        const auto& km = std::get<orth::KModification>(specs[0]);
        if (km.eta.imag() != 0.0)
            throw Error(Errc::complex_alpha, "closed forms need real eta");
        theorem = orth::sieved_kmod_recurrence(alpha, km.k, km.eta.real(), levels);
    }
    else {
        throw Error(Errc::invalid_spec, "--both-paths on the circle side needs a single associated, "
                                        "anti_associated or ell = 2 sieve spec, or k_modification then sieve");
    }
    const orth::RealRecurrence oracle = orth::geronimus_forward(result, levels);
    json out = json::object();
    out["verblunsky"] = io::to_json(vs);
    out["theorem"] = io::to_json(theorem);
    out["oracle"] = io::to_json(oracle);
    out["max_deviation"] = orth::max_scaled_diff(theorem, oracle);
    io::write_text(c.out, io::dump(out));
    return ok;
}

int cmd_perturb(const Common& c, const std::string& side_name, const std::string& spec_path, bool both)
{
    const orth::Side side = parse_side(side_name);
    const std::vector<orth::PerturbationSpec> specs = load_specs(spec_path, side);
    if (specs.empty())
        throw Error(Errc::invalid_spec, "empty perturbation list");
    return side == orth::Side::line ? perturb_line(c, specs, both) : perturb_circle(c, specs, both);
}

// ------------------------------------------------------------------- verify

int cmd_verify(const Common& c, const std::string& suite, std::optional<double> tol, std::uint64_t seed,
               const std::string& format)
{
    orth::VerifyOptions opts;
    opts.seed = seed;
    opts.depth = c.depth.value_or(default_depth());
    if (tol) {
        if (!(*tol > 0.0))
            throw Error(Errc::parse_error, "--tol must be positive");
        opts.tol = tol;
    }
    const orth::SuiteReport report = orth::run_suite(suite, opts);
    io::write_text(c.out, format == "json" ? io::dump(orth::report_to_json(report)) : orth::format_report(report));
    return report.passed() ? ok : input_error;
}

// --------------------------------------------------------------------- eval

cplx parse_point(const std::string& text)
{
    // "re" or "re:im"
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        const double re = std::stod(text.substr(0, colon), &used);
        if (used != (colon == std::string::npos ? text.size() : colon))
            throw std::invalid_argument(text);
        double im = 0.0;
        if (colon != std::string::npos) {
            const std::string tail = text.substr(colon + 1);
            im = std::stod(tail, &used);
            if (used != tail.size())
                throw std::invalid_argument(text);
        }
        return {re, im};
    }
    catch (const std::logic_error&) {
        throw Error(Errc::parse_error, "cannot parse point \"" + text + "\"");
    }
}

int cmd_eval(const Common& c, const std::string& side_name, const std::vector<std::string>& points)
{
    const json in = require_input(c);
    const std::size_t depth = c.depth.value_or(default_depth());
    const orth::Side side = parse_side(side_name);
    if (points.empty())
        throw Error(Errc::parse_error, "--at is required");
    std::string out = "point_re\tpoint_im\tvalue_re\tvalue_im\terror_estimate\n";
    for (const auto& text : points) {
        const cplx p = parse_point(text);
        const orth::Convergent v = side == orth::Side::line
                                       ? orth::s_evaluate({io::recurrence_from_json(in), depth}, p)
                                       : orth::f_evaluate({io::verblunsky_from_json(in), depth}, p);
        out += io::format_double(p.real()) + '\t' + io::format_double(p.imag()) + '\t' +
               io::format_double(v.value.real()) + '\t' + io::format_double(v.value.imag()) + '\t' +
               io::format_double(v.error_estimate) + '\n';
    }
    io::write_text(c.out, out);
    return ok;
}

// ----------------------------------------------------------------- fixtures

json complex_json(cplx v)
{
    return json::array({v.real(), v.imag()});
}

int cmd_fixtures(const Common& c)
{
    const std::size_t depth = c.depth.value_or(default_depth());
    json list = json::array();
    for (const orth::Fixture& f : orth::corollary_fixtures()) {
        json rows = json::array();
        for (const orth::FixtureRow& row : f.rows(depth)) {
            json r = json::object();
            r["point"] = complex_json(row.point);
            r["lhs"] = complex_json(row.lhs);
            r["rhs"] = complex_json(row.rhs);
            r["residual"] = row.residual;
            rows.push_back(std::move(r));
        }
        json item = json::object();
        item["name"] = f.name;
        item["description"] = f.description;
        item["expect_agreement"] = f.expect_agreement;
        item["rows"] = std::move(rows);
        list.push_back(std::move(item));
    }
    json out = json::object();
    out["depth"] = depth;
    out["fixtures"] = std::move(list);
    io::write_text(c.out, io::dump(out));
    return ok;
}

void add_common(CLI::App* sub, Common& c, bool with_n, bool with_depth)
{
    sub->add_option("--in", c.in, "input file");
    sub->add_option("--out", c.out, "output file (default stdout)");
    if (with_n)
        sub->add_option("--n", c.n, "number of levels")->check(CLI::PositiveNumber);
    if (with_depth)
        sub->add_option("--depth", c.depth, "convergent depth (default $ORTHO_SZEGO_DEPTH or 40)")
            ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orthogonal polynomials on the line and the circle through the Szegő map"};
    app.require_subcommand(1);
    Common common;

    std::string direction = "fwd";
    auto* geronimus = app.add_subcommand("geronimus", "Verblunsky <-> recurrence coefficients");
    add_common(geronimus, common, true, false);
    geronimus->add_option("--direction", direction, "fwd (alpha -> b, d) or inv (b, d -> alpha)")
        ->check(CLI::IsMember({"fwd", "inv"}));

    std::string side = "line";
    std::string spec_path;
    bool both = false;
    auto* perturb = app.add_subcommand("perturb", "apply perturbation specs");
    add_common(perturb, common, true, false);
    perturb->add_option("--side", side, "line or circle")->check(CLI::IsMember({"line", "circle"}));
    perturb->add_option("--spec", spec_path, "JSON file with one spec or a list");
    perturb->add_flag("--both-paths", both, "emit closed-form and brute-force images with their deviation");

    std::string suite;
    std::optional<double> tol;
    std::uint64_t seed = 7;
    std::string format = "text";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, common, false, true);
    verify->add_option("suite", suite, "roundtrip, rel, bridge, transfer, conjugation, theorems, lu, discrepancy")
        ->required();
    verify->add_option("--tol", tol, "override every property tolerance");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> points;
    auto* eval = app.add_subcommand("eval", "evaluate S (line) or F (circle) by convergents");
    add_common(eval, common, false, true);
    eval->add_option("--side", side, "line or circle")->check(CLI::IsMember({"line", "circle"}));
    eval->add_option("--at", points, "evaluation point, re or re:im (repeatable)");

    auto* fixtures = app.add_subcommand("fixtures", "closed-form fixture table");
    add_common(fixtures, common, false, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (geronimus->parsed())
            return cmd_geronimus(common, direction);
        if (perturb->parsed())
            return cmd_perturb(common, side, spec_path, both);
        if (verify->parsed())
            return cmd_verify(common, suite, tol, seed, format);
        if (eval->parsed())
            return cmd_eval(common, side, points);
        if (fixtures->parsed())
            return cmd_fixtures(common);
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.index())
            std::cerr << "index: " << *e.index() << '\n';
        return exit_code(e.code());
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}
