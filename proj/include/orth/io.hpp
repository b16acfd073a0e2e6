#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "orth/oprl.hpp"
#include "orth/opuc.hpp"
#include "orth/perturb.hpp"
#include "orth/szego.hpp"

namespace orth::io {

using json = nlohmann::json;

/// Shortest-free fixed format: 17 significant digits, "%.17g".
std::string format_double(double v);

/// Pretty JSON with every float written by format_double. Arrays of scalars
/// stay on one line; object keys come out sorted.
std::string dump(const json& j);

json to_json(const RealRecurrence& rc);
json to_json(const VerblunskySeq& vs);
json to_json(const RealVerblunsky& alpha);
json to_json(const VSeq& v);
json to_json(const PerturbationSpec& spec);

/// All readers fail with Errc::parse_error on malformed input.
RealRecurrence recurrence_from_json(const json& j);
/// "alpha" entries may be [re, im] pairs or plain reals.
VerblunskySeq verblunsky_from_json(const json& j);
VSeq vseq_from_json(const json& j);
PerturbationSpec spec_from_json(const json& j);
/// A single spec object, an array of specs, or {"specs": [...]}.
std::vector<PerturbationSpec> specs_from_json(const json& j);

json parse(const std::string& text);
json read_file(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);
/// Writes `text` to `path`, or to stdout when the path is empty or "-".
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace orth::io
