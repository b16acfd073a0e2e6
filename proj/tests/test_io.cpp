#include <doctest.h>

#include "orth/error.hpp"
#include "orth/fixtures.hpp"
#include "orth/io.hpp"

using namespace orth;

namespace {

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    }
    catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::invalid_spec;
}

}  // namespace

TEST_CASE("format_double")
{
    CHECK(io::format_double(0.0) == "0.0");
    CHECK(io::format_double(0.25) == "0.25");
    CHECK(io::format_double(3.0) == "3.0");
    CHECK(io::format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(io::format_double(1e-20) == "9.9999999999999995e-21");
    const double v = 0.1 + 0.2;
    CHECK(std::stod(io::format_double(v)) == v);
}

TEST_CASE("recurrence roundtrip")
{
    const RealRecurrence t = chebyshev_t_recurrence(3);
    const std::string text = io::dump(io::to_json(t));
    CHECK(text == "{\n  \"b\": [0.0, 0.0, 0.0],\n  \"d\": [0.5, 0.25, 0.25]\n}\n");
    CHECK(io::recurrence_from_json(io::parse(text)) == t);
}

TEST_CASE("verblunsky roundtrip")
{
    const VerblunskySeq vs({cplx(0.1, -0.2), cplx(0.3)});
    CHECK(io::verblunsky_from_json(io::to_json(vs)) == vs);
    CHECK(io::verblunsky_from_json(io::parse(R"({"alpha": [0.5, [0.1, 0.2]]})")) ==
          VerblunskySeq({cplx(0.5), cplx(0.1, 0.2)}));
    CHECK(io::vseq_from_json(io::to_json(VSeq({1.0, 0.5}))) == VSeq({1.0, 0.5}));
}

TEST_CASE("spec parsing")
{
    const auto specs = io::specs_from_json(io::parse(R"({"specs": [
        {"kind": "co_dilated", "k": 1, "lambda": 0.5},
        {"kind": "co_recursive", "k": 0, "tau": 0.3},
        {"kind": "k_modification", "k": 2, "eta": [0.1, 0.2]},
        {"kind": "associated", "k": 3},
        {"kind": "anti_associated", "b": [0.1], "d": [0.2]},
        {"kind": "anti_associated", "xi": [0.3, -0.1]},
        {"kind": "sieve", "ell": 2}]})"));
    REQUIRE(specs.size() == 7);
    CHECK(std::get<CoDilated>(specs[0]) == CoDilated{1, 0.5});
    CHECK(std::get<CoRecursive>(specs[1]) == CoRecursive{0, 0.3});
    CHECK(std::get<KModification>(specs[2]) == KModification{2, cplx(0.1, 0.2)});
    CHECK(std::get<Associated>(specs[3]).k == 3);
    CHECK(std::get<AntiAssociated>(specs[4]).on_line());
    CHECK(std::get<AntiAssociated>(specs[5]).k() == 2);
    CHECK(std::get<Sieve>(specs[6]).ell == 2);

    for (const auto& s : specs)
        CHECK(io::spec_from_json(io::to_json(s)) == s);

    CHECK(io::specs_from_json(io::parse(R"({"kind": "sieve", "ell": 3})")).size() == 1);
}

TEST_CASE("parse errors and validation")
{
    CHECK(code_of([] { io::parse("{not json"); }) == Errc::parse_error);
    CHECK(code_of([] { io::recurrence_from_json(io::parse(R"({"b": [0]})")); }) == Errc::parse_error);
    CHECK(code_of([] { io::spec_from_json(io::parse(R"({"kind": "nope"})")); }) == Errc::invalid_spec);
    CHECK(code_of([] { io::spec_from_json(io::parse(R"({"k": 1})")); }) == Errc::parse_error);
    CHECK(code_of([] { io::spec_from_json(io::parse(R"({"kind": "k_modification", "k": 0, "eta": 1.5})")); }) ==
          Errc::invalid_eta);
    CHECK(code_of([] { io::read_file("/nonexistent/file.json"); }) == Errc::parse_error);
}
