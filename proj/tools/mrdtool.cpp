// mrdtool: construct, verify, switch, census and compare rank-metric codes.
//
// Exit codes: 0 ok, 2 invalid parameters, 3 not MRD / verification failure, 4 parse error, 5 cap exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mrd/error.hpp"
#include "mrd/invariants.hpp"
#include "mrd/io.hpp"
#include "mrd/switching.hpp"

namespace fs = std::filesystem;
using namespace mrd;
using io::Json;

namespace {

enum Exit { kOk = 0, kParams = 2, kNotMrd = 3, kParse = 4, kCap = 5 };

int exit_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::TooLarge: return kCap;
    case ErrorCode::SubcodeNotMRD:
    case ErrorCode::ReplacementNotMRD:
    case ErrorCode::NotMRDInput: return kNotMrd;
    default: return kParams;
    }
}

struct Config {
    fs::path out = ".";
    std::string level = "cardinality";
    Caps caps;
    std::uint64_t seed = 0;
    bool anticode() const { return level == "anticode"; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary);
    require(static_cast<bool>(out), ErrorCode::BadParameters, "cannot write " + p.string());
    out << s;
}

// Verification verdicts for one code; sets `mrd` to the verdict at the requested level.
Json verdict(const RankCode& c, const Config& cfg, bool& mrd) {
    Json j;
    j["params"] = io::params_json(c.params());
    j["kind"] = c.is_linear() ? "linear" : "explicit";
    j["dimension"] = c.is_linear() ? Json(c.dimension()) : Json(nullptr);
    j["cardinality"] = c.size();
    j["mindist"] = c.size() >= 2 ? Json(min_rank_distance(c, cfg.caps.members)) : Json(nullptr);
    const bool card = is_mrd(c, cfg.caps.members);
    j["mrd_cardinality"] = card;
    mrd = card;
    if (cfg.anticode()) {
        const auto rep = verify_mrd_by_anticodes(c, cfg.caps.anticode_checks);
        j["mrd_anticode"] = rep.mrd;
        j["anticodes"] = rep.anticodes;
        mrd = rep.mrd;
    }
    j["mrd"] = mrd;
    return j;
}

int cmd_construct(const fs::path& recipe_path, const Config& cfg) {
    const auto recipe = io::read_recipe_file(recipe_path);
    const auto out = io::run_recipe(recipe, cfg.caps);
    fs::create_directories(cfg.out);
    Json rep;
    rep["command"] = "construct";
    rep["construction"] = recipe.construction;
    Json params = Json::object();
    for (const auto& [k, v] : recipe.params) params[k] = v;
    rep["recipe"] = params;
    rep["level"] = cfg.level;
    rep["seed"] = cfg.seed;
    rep["codes"] = Json::array();
    bool all = true;
    for (const auto& [name, code] : out.codes) {
        const std::string file = name + ".mrd";
        io::write_code_file(cfg.out / file, code);
        bool ok = false;
        Json j;
        j["name"] = name;
        j["file"] = file;
        j.update(verdict(code, cfg, ok));
        rep["codes"].push_back(j);
        all = all && ok;
    }
    emit(rep);
    return all ? kOk : kNotMrd;
}

int cmd_verify(const fs::path& file, const Config& cfg) {
    const auto c = io::read_code_file(file);
    Json rep;
    rep["command"] = "verify";
    rep["file"] = file.filename().string();
    rep["level"] = cfg.level;
    bool ok = false;
    rep.update(verdict(c, cfg, ok));
    emit(rep);
    return ok ? kOk : kNotMrd;
}

int cmd_switch(const fs::path& code_file, const fs::path& plan_file, const std::string& name, const Config& cfg) {
    const auto base = io::read_code_file(code_file);
    const auto text = io::read_plan_file(plan_file);
    const fs::path referenced = plan_file.parent_path() / text.base;
    if (fs::exists(referenced))
        require(io::read_code_file(referenced).same_code(base, cfg.caps.members), ErrorCode::ParamMismatch,
                "plan base " + text.base + " differs from " + code_file.string());
    const auto result = apply_switch_plan(io::resolve_plan(text, base), cfg.caps.members);
    fs::create_directories(cfg.out);
    const std::string file = name + ".mrd";
    io::write_code_file(cfg.out / file, result);
    Json rep;
    rep["command"] = "switch";
    rep["base"] = code_file.filename().string();
    rep["plan"] = plan_file.filename().string();
    rep["m_prime"] = text.m_prime;
    rep["file"] = file;
    rep["changed"] = !result.same_code(base, cfg.caps.members);
    rep["level"] = cfg.level;
    bool ok = false;
    rep.update(verdict(result, cfg, ok));
    emit(rep);
    return ok ? kOk : kNotMrd;
}

int cmd_census(const fs::path& code_file, std::size_t m_prime, const std::vector<fs::path>& choice_files, const Config& cfg) {
    const auto base = io::read_code_file(code_file);
    std::vector<RankCode> choices;
    for (const auto& f : choice_files) choices.push_back(io::read_code_file(f));
    require(!choices.empty(), ErrorCode::BadParameters, "census needs at least one replacement code");
    fs::create_directories(cfg.out);
    Json plans = Json::array();
    std::vector<RankCode> codes;
    bool all = true;
    enumerate_switched(
        base, m_prime, choices,
        [&](const std::vector<std::size_t>& choice, const RankCode& code) {
            char name[32];
            std::snprintf(name, sizeof name, "plan_%05zu.mrd", codes.size());
            io::write_code_file(cfg.out / name, code);
            bool ok = false;
            const Json v = verdict(code, cfg, ok);
            all = all && ok;
            Json j;
            j["index"] = codes.size();
            j["choice"] = choice;
            j["file"] = name;
            j["mrd"] = ok;
            j["signature"] = io::signature_json(signature(code, cfg.caps));
            plans.push_back(j);
            codes.push_back(code);
        },
        cfg.caps.census, cfg.caps.members);
    Json rep;
    rep["command"] = "census";
    rep["base"] = code_file.filename().string();
    rep["m_prime"] = m_prime;
    Json names = Json::array();
    for (const auto& f : choice_files) names.push_back(f.filename().string());
    rep["choices"] = names;
    rep["level"] = cfg.level;
    rep["plan_count"] = codes.size();
    rep["distinct_count"] = distinct_count(codes, cfg.caps.members);
    rep["all_mrd"] = all;
    rep["plans"] = plans;
    write_text(cfg.out / "manifest.json", rep.dump(2) + "\n");
    emit(rep);
    return all ? kOk : kNotMrd;
}

int cmd_invariants(const std::vector<fs::path>& files, const Config& cfg) {
    std::vector<Signature> sigs;
    Json codes = Json::array();
    for (const auto& f : files) {
        const auto c = io::read_code_file(f);
        sigs.push_back(signature(c, cfg.caps));
        const auto aut = aut_order(c.params().q, c.m(), c.n());
        Json j;
        j["file"] = f.filename().string();
        j["params"] = io::params_json(c.params());
        j["signature"] = io::signature_json(sigs.back());
        j["aut_order"] = Json{{"formula", io::big_text(aut.formula)},
                              {"with_transpose", io::big_text(aut.with_transpose)},
                              {"square", aut.square}};
        codes.push_back(j);
    }
    Json cert = Json::array();
    for (const auto& a : sigs) {
        Json row = Json::array();
        for (const auto& b : sigs) row.push_back(inequivalence_certificate(a, b).value_or("indistinguishable"));
        cert.push_back(row);
    }
    Json rep;
    rep["command"] = "invariants";
    rep["codes"] = codes;
    rep["certificates"] = cert;
    emit(rep);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-metric MRD code toolkit"};
    app.require_subcommand(1);
    Config cfg;
    std::string out = ".";
    app.add_option("--out", out, "Output directory")->capture_default_str();
    app.add_option("--level", cfg.level, "Verification level")
        ->check(CLI::IsMember({"cardinality", "anticode"}))
        ->capture_default_str();
    app.add_option("--cap-members", cfg.caps.members, "Codewords enumerated per code")->capture_default_str();
    app.add_option("--cap-anticodes", cfg.caps.anticode_checks, "Anticode membership checks")->capture_default_str();
    app.add_option("--cap-census", cfg.caps.census, "Plans per census")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized selection (recorded in reports)")->capture_default_str();

    std::string recipe, code, plan, name = "switched";
    std::vector<std::string> files, choices;
    std::size_t m_prime = 0;

    auto* construct = app.add_subcommand("construct", "Build codes from a recipe file");
    construct->add_option("recipe", recipe)->required();
    auto* verify = app.add_subcommand("verify", "Check the MRD property of a code file");
    verify->add_option("code", code)->required();
    auto* sw = app.add_subcommand("switch", "Apply a switch plan to a code file");
    sw->add_option("code", code)->required();
    sw->add_option("plan", plan)->required();
    sw->add_option("--name", name, "Output file stem")->capture_default_str();
    auto* census = app.add_subcommand("census", "Enumerate all per-coset replacement choices");
    census->add_option("code", code)->required();
    census->add_option("--mprime", m_prime, "Rows of the switched subcode")->required();
    census->add_option("choices", choices, "Replacement code files")->required();
    auto* inv = app.add_subcommand("invariants", "Signatures and inequivalence certificates");
    inv->add_option("codes", files)->required();
    for (auto* s : {construct, verify, sw, census, inv}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kParams;
    }
    cfg.out = out;

    try {
        if (*construct) return cmd_construct(recipe, cfg);
        if (*verify) return cmd_verify(code, cfg);
        if (*sw) return cmd_switch(code, plan, name, cfg);
        if (*census) {
            std::vector<fs::path> cf(choices.begin(), choices.end());
            return cmd_census(code, m_prime, cf, cfg);
        }
        std::vector<fs::path> fps(files.begin(), files.end());
        return cmd_invariants(fps, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParams;
    }
}
