#include "orth/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace orth::io {

namespace {

[[noreturn]] void fail(const std::string& msg)
{
    throw Error(Errc::parse_error, msg);
}

bool is_scalar(const json& j)
{
    return !j.is_object() && !j.is_array();
}

void emit(const json& j, std::string& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_number_float()) {
        out += format_double(j.get<double>());
    }
    else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool flat = true;
        for (const auto& e : j)
            if (!is_scalar(e) && !(e.is_array() && e.size() <= 2 && std::all_of(e.begin(), e.end(), is_scalar)))
                flat = false;
        if (flat) {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                emit(j[i], out, indent + 1);
            }
            out += ']';
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            emit(j[i], out, indent + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + ']';
    }
    else if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += inner + json(it.key()).dump() + ": ";
            emit(it.value(), out, indent + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + '}';
    }
    else {
        out += j.dump();
    }
}

std::vector<double> real_list(const json& j, const char* key)
{
    if (!j.contains(key))
        fail(std::string("missing key \"") + key + "\"");
    const json& arr = j.at(key);
    if (!arr.is_array())
        fail(std::string("\"") + key + "\" must be an array");
    std::vector<double> out;
    for (const auto& e : arr) {
        if (!e.is_number())
            fail(std::string("\"") + key + "\" must contain numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

cplx complex_value(const json& e, const char* key)
{
    if (e.is_number())
        return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        return {e[0].get<double>(), e[1].get<double>()};
    fail(std::string("\"") + key + "\" entries must be numbers or [re, im] pairs");
}

json complex_json(cplx c)
{
    return json::array({c.real(), c.imag()});
}

std::size_t index_value(const json& j, const char* key)
{
    if (!j.contains(key))
        fail(std::string("missing key \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

double real_value(const json& j, const char* key)
{
    if (!j.contains(key))
        fail(std::string("missing key \"") + key + "\"");
    if (!j.at(key).is_number())
        fail(std::string("\"") + key + "\" must be a number");
    return j.at(key).get<double>();
}

}  // namespace

std::string format_double(double v)
{
    if (std::isnan(v))
        return "NaN";
    if (std::isinf(v))
        return v > 0 ? "Infinity" : "-Infinity";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos)
        s += ".0";
    return s;
}

std::string dump(const json& j)
{
    std::string out;
    emit(j, out, 0);
    out += '\n';
    return out;
}

json to_json(const RealRecurrence& rc)
{
    json j = json::object();
    j["b"] = rc.b_values();
    j["d"] = rc.d_values();
    return j;
}

json to_json(const VerblunskySeq& vs)
{
    json arr = json::array();
    for (const auto& a : vs.values())
        arr.push_back(complex_json(a));
    json j = json::object();
    j["alpha"] = std::move(arr);
    return j;
}

json to_json(const RealVerblunsky& alpha)
{
    json arr = json::array();
    for (const double a : alpha.values())
        arr.push_back(complex_json(a));
    json j = json::object();
    j["alpha"] = std::move(arr);
    return j;
}

json to_json(const VSeq& v)
{
    json j = json::object();
    j["v"] = v.values();
    return j;
}

json to_json(const PerturbationSpec& spec)
{
    json j = json::object();
    j["kind"] = std::string(kind_name(spec));
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoDilated>) {
                j["k"] = s.k;
                j["lambda"] = s.lambda;
            }
            else if constexpr (std::is_same_v<T, CoRecursive>) {
                j["k"] = s.k;
                j["tau"] = s.tau;
            }
            else if constexpr (std::is_same_v<T, KModification>) {
                j["k"] = s.k;
                j["eta"] = complex_json(s.eta);
            }
            else if constexpr (std::is_same_v<T, Associated>) {
                j["k"] = s.k;
            }
            else if constexpr (std::is_same_v<T, AntiAssociated>) {
                if (s.on_line()) {
                    j["b"] = s.b;
                    j["d"] = s.d;
                }
                else {
                    json xi = json::array();
                    for (const auto& x : s.xi)
                        xi.push_back(complex_json(x));
                    j["xi"] = std::move(xi);
                }
            }
            else {
                j["ell"] = s.ell;
            }
        },
        spec);
    return j;
}

RealRecurrence recurrence_from_json(const json& j)
{
    if (!j.is_object())
        fail("recurrence file must be an object with \"b\" and \"d\"");
    return {real_list(j, "b"), real_list(j, "d")};
}

VerblunskySeq verblunsky_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("alpha") || !j.at("alpha").is_array())
        fail("Verblunsky file must be an object with an \"alpha\" array");
    std::vector<cplx> alpha;
    for (const auto& e : j.at("alpha"))
        alpha.push_back(complex_value(e, "alpha"));
    return VerblunskySeq(std::move(alpha));
}

VSeq vseq_from_json(const json& j)
{
    if (!j.is_object())
        fail("v-sequence file must be an object with \"v\"");
    return VSeq(real_list(j, "v"));
}

PerturbationSpec spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail("perturbation spec needs a string \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    PerturbationSpec spec;
    if (kind == "co_dilated")
        spec = CoDilated{index_value(j, "k"), real_value(j, "lambda")};
    else if (kind == "co_recursive")
        spec = CoRecursive{index_value(j, "k"), real_value(j, "tau")};
    else if (kind == "k_modification") {
        if (!j.contains("eta"))
            fail("missing key \"eta\"");
        spec = KModification{index_value(j, "k"), complex_value(j.at("eta"), "eta")};
    }
    else if (kind == "associated")
        spec = Associated{index_value(j, "k")};
    else if (kind == "anti_associated") {
        AntiAssociated a;
        if (j.contains("xi")) {
            if (!j.at("xi").is_array())
                fail("\"xi\" must be an array");
            for (const auto& e : j.at("xi"))
                a.xi.push_back(complex_value(e, "xi"));
            if (j.contains("b") || j.contains("d"))
                throw Error(Errc::invalid_spec, "anti_associated takes either (b, d) or xi, not both");
        }
        else {
            a.b = real_list(j, "b");
            a.d = real_list(j, "d");
        }
        spec = std::move(a);
    }
    else if (kind == "sieve")
        spec = Sieve{index_value(j, "ell")};
    else
        throw Error(Errc::invalid_spec, "unknown perturbation kind \"" + kind + "\"");
    validate(spec);
    return spec;
}

std::vector<PerturbationSpec> specs_from_json(const json& j)
{
    if (j.is_object() && j.contains("specs"))
        return specs_from_json(j.at("specs"));
    std::vector<PerturbationSpec> out;
    if (j.is_array()) {
        for (const auto& e : j)
            out.push_back(spec_from_json(e));
    }
    else {
        out.push_back(spec_from_json(j));
    }
    return out;
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    }
    catch (const json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_file(const std::filesystem::path& path)
{
    return parse(read_text(path));
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail("cannot write " + path.string());
    out << text;
    if (!out)
        fail("write failed for " + path.string());
}

}  // namespace orth::io
