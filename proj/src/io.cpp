#include "mrd/io.hpp"

#include <fstream>
#include <sstream>

#include "mrd/constructions.hpp"
#include "mrd/error.hpp"

namespace mrd::io {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    const auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
    require(!v.empty() && v.find_first_not_of("0123456789") == std::string::npos && v.size() <= 18,
            ErrorCode::ParseError, "bad integer for " + key + ": '" + v + "'");
    return std::stoull(v);
}

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& toks, const std::string& where) {
    std::map<std::string, std::string> kv;
    for (const auto& t : toks) {
        const auto eq = t.find('=');
        require(eq != std::string::npos && eq > 0, ErrorCode::ParseError, where + ": expected key=value, got '" + t + "'");
        require(kv.emplace(t.substr(0, eq), t.substr(eq + 1)).second, ErrorCode::ParseError,
                where + ": repeated key " + t.substr(0, eq));
    }
    return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key, const std::string& where) {
    const auto it = kv.find(key);
    require(it != kv.end(), ErrorCode::ParseError, where + ": missing " + key);
    return it->second;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::ParseError, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

std::string list_text(const std::vector<std::uint32_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

FieldPtr recipe_field(const std::map<std::string, std::string>& kv) {
    const auto [p, e] = parse_q(need(kv, "q", "recipe"));
    std::optional<std::vector<std::uint32_t>> mod;
    if (kv.count("modulus")) mod = parse_int_list(kv.at("modulus"));
    return Field::make(p, e, mod);
}

TowerPtr recipe_tower(const std::map<std::string, std::string>& kv, std::uint32_t m) {
    std::optional<std::vector<std::uint32_t>> ext;
    if (kv.count("ext_modulus")) ext = parse_int_list(kv.at("ext_modulus"));
    return Tower::make(recipe_field(kv), m, ext);
}

} // namespace

std::pair<std::uint32_t, std::uint32_t> parse_q(const std::string& s) {
    const auto caret = s.find('^');
    std::uint64_t p = 0, e = 1;
    if (caret != std::string::npos) {
        p = parse_uint("q", s.substr(0, caret));
        e = parse_uint("q", s.substr(caret + 1));
    } else {
        const auto q = parse_uint("q", s);
        require(q >= 2, ErrorCode::ParseError, "q must be a prime power");
        p = 2;
        while (q % p != 0) ++p;
        std::uint64_t r = q;
        e = 0;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        require(r == 1, ErrorCode::ParseError, "q=" + s + " is not a prime power");
    }
    require(p >= 2 && e >= 1 && p < (1u << 20) && e < 32, ErrorCode::ParseError, "bad q '" + s + "'");
    return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)};
}

std::vector<std::uint32_t> parse_int_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto end = std::min(s.find(',', start), s.size());
        const auto v = parse_uint("list", s.substr(start, end - start));
        require(v <= UINT32_MAX, ErrorCode::ParseError, "list entry too large");
        out.push_back(static_cast<std::uint32_t>(v));
        start = end + 1;
    }
    return out;
}

std::string code_text(const RankCode& c) {
    const Field& f = c.F();
    std::string q = std::to_string(f.characteristic());
    if (f.degree() > 1) q += "^" + std::to_string(f.degree());
    std::string s = "# mrdcode v1\n";
    s += "q=" + q + " modulus=" + list_text(f.modulus()) + " m=" + std::to_string(c.m()) + " n=" +
         std::to_string(c.n()) + " d=" + std::to_string(c.d()) + " kind=" + (c.is_linear() ? "linear" : "explicit") + "\n";
    for (const auto& x : c.body()) s += x.text() + "\n";
    return s;
}

void write_code(std::ostream& os, const RankCode& c) { os << code_text(c); }

RankCode parse_code(const std::string& text) {
    const auto lines = lines_of(text);
    require(!lines.empty() && trim(lines[0]) == "# mrdcode v1", ErrorCode::ParseError, "missing '# mrdcode v1' header");
    require(lines.size() >= 2, ErrorCode::ParseError, "missing parameter line");
    const auto kv = parse_kv(split_ws(lines[1]), "parameter line");
    for (const auto& [k, v] : kv)
        require(k == "q" || k == "modulus" || k == "m" || k == "n" || k == "d" || k == "kind", ErrorCode::ParseError,
                "unknown key " + k);
    const auto [p, e] = parse_q(need(kv, "q", "parameter line"));
    const auto mod = parse_int_list(need(kv, "modulus", "parameter line"));
    const auto m = parse_uint("m", need(kv, "m", "parameter line"));
    const auto n = parse_uint("n", need(kv, "n", "parameter line"));
    const auto d = parse_uint("d", need(kv, "d", "parameter line"));
    const auto& kind = need(kv, "kind", "parameter line");
    require(kind == "linear" || kind == "explicit", ErrorCode::ParseError, "kind must be linear or explicit");
    require(m >= 1 && n >= 1 && m * n <= 4096, ErrorCode::ParseError, "bad shape");
    FieldPtr f;
    try {
        f = Field::make(p, e, mod);
    } catch (const Error& err) {
        fail(ErrorCode::ParseError, std::string("bad field: ") + err.what());
    }
    std::vector<Matrix> mats;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto l = trim(lines[i]);
        if (l.empty()) continue;
        mats.push_back(Matrix::parse(f, m, n, l));
    }
    try {
        if (kind == "linear") return RankCode::linear(f, m, n, d, std::move(mats));
        return RankCode::explicit_set(f, m, n, d, std::move(mats));
    } catch (const Error& err) {
        if (err.code() == ErrorCode::BadParameters) throw;
        fail(ErrorCode::ParseError, err.what());
    }
}

RankCode read_code_file(const std::filesystem::path& p) { return parse_code(read_text(p)); }

void write_code_file(const std::filesystem::path& p, const RankCode& c) {
    std::ofstream out(p, std::ios::binary);
    require(static_cast<bool>(out), ErrorCode::ParseError, "cannot write " + p.string());
    write_code(out, c);
}

Recipe parse_recipe(const std::string& text, const std::filesystem::path& dir) {
    std::vector<std::string> toks;
    for (const auto& line : lines_of(text)) {
        const auto t = split_ws(strip_comment(line));
        toks.insert(toks.end(), t.begin(), t.end());
    }
    auto kv = parse_kv(toks, "recipe");
    Recipe r;
    r.construction = need(kv, "construction", "recipe");
    kv.erase("construction");
    r.params = std::move(kv);
    r.dir = dir;
    return r;
}

Recipe read_recipe_file(const std::filesystem::path& p) { return parse_recipe(read_text(p), p.parent_path()); }

RecipeOutput run_recipe(const Recipe& r, const Caps& caps) {
    const auto& kv = r.params;
    auto num = [&](const std::string& k) { return static_cast<std::size_t>(parse_uint(k, need(kv, k, "recipe"))); };
    auto opt_num = [&](const std::string& k) -> std::optional<std::uint64_t> {
        if (!kv.count(k)) return std::nullopt;
        return parse_uint(k, kv.at(k));
    };
    auto allowed = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : kv) {
            bool ok = k == "q" || k == "modulus" || k == "ext_modulus";
            for (const char* a : keys) ok = ok || k == a;
            require(ok, ErrorCode::ParseError, "recipe key " + k + " is not used by " + r.construction);
        }
    };
    RecipeOutput out;
    const auto& name = r.construction;
    if (name == "gabidulin") {
        allowed({"m", "n", "d"});
        const auto n = num("n"), d = num("d");
        require(1 <= d && d <= n, ErrorCode::BadParameters, "need 1 <= d <= n");
        out.codes.emplace_back("C", gabidulin(recipe_tower(kv, static_cast<std::uint32_t>(num("m"))), n, n - d + 1));
    } else if (name == "construction1") {
        allowed({"m", "m1", "n", "d", "eta"});
        std::optional<Elem> eta;
        if (auto e = opt_num("eta")) eta = static_cast<Elem>(*e);
        // Parse every key before building the aggregate; gcc 11 leaks members of a partially built one.
        const auto m1 = static_cast<std::uint32_t>(num("m1"));
        const auto n = num("n"), d = num("d");
        auto tower = recipe_tower(kv, static_cast<std::uint32_t>(num("m")));
        const auto t = construction1({std::move(tower), m1, n, d, std::nullopt, eta});
        out.codes.emplace_back("C", t.C);
        out.codes.emplace_back("C0", t.C0);
    } else if (name == "subtract_many") {
        allowed({"mu", "l"});
        const auto t = subtract_many(recipe_field(kv), static_cast<std::uint32_t>(num("mu")), static_cast<std::uint32_t>(num("l")));
        out.codes.emplace_back("C", t.C);
        out.codes.emplace_back("C0", t.C0);
    } else if (name == "wedderburn") {
        allowed({"m", "n", "eta"});
        std::optional<Elem> eta;
        if (auto e = opt_num("eta")) eta = static_cast<Elem>(*e);
        out.codes.emplace_back("C", wedderburn_code(recipe_tower(kv, static_cast<std::uint32_t>(num("m"))), num("n"), eta).C);
    } else if (name == "product") {
        allowed({"top", "bottom"});
        const auto top = read_code_file(r.dir / need(kv, "top", "recipe"));
        const auto bottom = read_code_file(r.dir / need(kv, "bottom", "recipe"));
        out.codes.emplace_back("C", product(top, bottom, caps.members));
    } else if (name == "affine_rank") {
        allowed({"m", "n", "d", "target"});
        out.codes.emplace_back("C", build_affine_rank_code(recipe_field(kv), num("m"), num("n"), num("d"), num("target")));
    } else if (name == "aperiodic") {
        allowed({"m", "n", "d"});
        out.codes.emplace_back("C", build_aperiodic_code(recipe_field(kv), num("m"), num("n"), num("d")));
    } else {
        fail(ErrorCode::ParseError, "unknown construction '" + name + "'");
    }
    return out;
}

PlanText parse_plan(const std::string& text, const std::filesystem::path& dir) {
    const auto lines = lines_of(text);
    require(!lines.empty() && trim(lines[0]) == "# mrdplan v1", ErrorCode::ParseError, "missing '# mrdplan v1' header");
    PlanText p;
    p.dir = dir;
    bool header = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = split_ws(strip_comment(lines[i]));
        if (toks.empty()) continue;
        if (!header) {
            const auto kv = parse_kv(toks, "plan header");
            require(kv.size() == 2, ErrorCode::ParseError, "plan header needs exactly base= and mprime=");
            p.base = need(kv, "base", "plan header");
            p.m_prime = static_cast<std::size_t>(parse_uint("mprime", need(kv, "mprime", "plan header")));
            header = true;
            continue;
        }
        const auto& kw = toks[0];
        if (kw == "keep") {
            require(toks.size() == 1, ErrorCode::ParseError, "keep takes no argument");
            p.directives.emplace_back(kw, "");
        } else if (kw == "translate" || kw == "replace") {
            require(toks.size() == 2, ErrorCode::ParseError, kw + " takes one argument");
            p.directives.emplace_back(kw, toks[1]);
        } else {
            fail(ErrorCode::ParseError, "unknown plan directive '" + kw + "'");
        }
    }
    require(header, ErrorCode::ParseError, "missing plan header");
    return p;
}

PlanText read_plan_file(const std::filesystem::path& p) { return parse_plan(read_text(p), p.parent_path()); }

std::string plan_text(const PlanText& p) {
    std::string s = "# mrdplan v1\nbase=" + p.base + " mprime=" + std::to_string(p.m_prime) + "\n";
    for (const auto& [k, a] : p.directives) s += a.empty() ? k + "\n" : k + " " + a + "\n";
    return s;
}

SwitchPlan resolve_plan(const PlanText& p, const RankCode& base) {
    SwitchPlan plan{base, p.m_prime, {}};
    for (const auto& [k, a] : p.directives) {
        if (k == "keep") {
            plan.directives.push_back(Directive::keep());
        } else if (k == "translate") {
            plan.directives.push_back(Directive::translate(Matrix::parse(base.field(), p.m_prime, base.n(), a)));
        } else {
            plan.directives.push_back(Directive::replace(read_code_file(p.dir / a)));
        }
    }
    return plan;
}

Json params_json(const CodeParams& p) { return Json{{"q", p.q}, {"m", p.m}, {"n", p.n}, {"d", p.d}}; }

Json rankdist_json(const RankDistribution& d) {
    Json a = Json::array();
    const bool integral = d.integral();
    for (std::size_t r = 0; r < d.pair_counts.size(); ++r) {
        if (integral) {
            a.push_back(d.size ? d.pair_counts[r] / d.size : 0);
        } else {
            a.push_back(d.value(r));
        }
    }
    return a;
}

Json signature_json(const Signature& s) {
    Json j;
    j["card"] = s.card;
    j["mindist"] = s.mindist ? Json(*s.mindist) : Json(nullptr);
    j["rankdist"] = rankdist_json(s.rankdist);
    j["kernel_dim"] = s.kernel_dim;
    j["affine_rank"] = s.affine_rank;
    Json prof = Json::object();
    for (const auto& [mp, v] : s.subcode_profile) prof[std::to_string(mp)] = v ? Json(*v) : Json(nullptr);
    j["subcode_profile"] = prof;
    return j;
}

std::string big_text(const BigInt& x) { return x.str(); }

} // namespace mrd::io
