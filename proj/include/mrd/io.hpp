#pragma once

// Text formats: mrdcode v1 code files, construction recipes, switch plans, and JSON views of reports.
// Layouts are described in docs/formats.md.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mrd/code.hpp"
#include "mrd/invariants.hpp"
#include "mrd/switching.hpp"

namespace mrd::io {

using Json = nlohmann::ordered_json;

/// Parses "p^e" or a prime power such as "4" into (p, e). Throws ParseError.
std::pair<std::uint32_t, std::uint32_t> parse_q(const std::string& s);
/// Comma-separated integers, e.g. "1,1,0,1". Throws ParseError.
std::vector<std::uint32_t> parse_int_list(const std::string& s);

std::string code_text(const RankCode& c);
void write_code(std::ostream& os, const RankCode& c);
/// Throws ParseError for malformed content (including dependent bases and repeated codewords).
RankCode parse_code(const std::string& text);
RankCode read_code_file(const std::filesystem::path& p);
void write_code_file(const std::filesystem::path& p, const RankCode& c);

/// `key=value` tokens separated by whitespace; '#' starts a comment. `construction` names the builder.
struct Recipe {
    std::string construction;
    std::map<std::string, std::string> params;
    std::filesystem::path dir; // paths in parameters are relative to this
};
Recipe parse_recipe(const std::string& text, const std::filesystem::path& dir = {});
Recipe read_recipe_file(const std::filesystem::path& p);

/// Named outputs of a recipe ("C", and "C0" when the construction has a row-supported subcode).
struct RecipeOutput {
    std::vector<std::pair<std::string, RankCode>> codes;
};
/// Throws ParseError for missing or malformed keys, and the construction's own errors.
RecipeOutput run_recipe(const Recipe& r, const Caps& caps = Caps{});

struct PlanText {
    std::string base;          // as written, relative to the plan file
    std::size_t m_prime = 0;
    std::vector<std::pair<std::string, std::string>> directives; // (keep|translate|replace, argument)
    std::filesystem::path dir;
};
PlanText parse_plan(const std::string& text, const std::filesystem::path& dir = {});
PlanText read_plan_file(const std::filesystem::path& p);
std::string plan_text(const PlanText& p);
/// Resolves matrices and replacement files against `base`.
SwitchPlan resolve_plan(const PlanText& p, const RankCode& base);

Json params_json(const CodeParams& p);
Json rankdist_json(const RankDistribution& d);
Json signature_json(const Signature& s);
std::string big_text(const BigInt& x);

} // namespace mrd::io
