// pgw: verify | build | catalog | field-info

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pgw/appendix.hpp"
#include "pgw/classify.hpp"

using namespace pgw;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kSchema = "pgw-report/1";
constexpr int kMaxDegree = 16;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int p = 3;
    std::string m = "auto";
    uint64_t seed = 1;
    std::vector<std::string> suites{"all"};
    int m_cap = kMaxDegree;
    std::string out;
    std::string golden;
    std::string pd_rows = "auto";
    int cobar_samples = 100;
    int empty_samples = 200;
    int coverage_points = 500;
    bool timings = false;
};

const std::vector<std::string> kSuites{"types", "emptiness", "cobar", "orbits", "pd", "appendix"};

void validate(RunConfig& c) {
    if (c.p == 2) throw ConfigError("p>2 required");
    if (c.p != 3 && c.p != 5 && c.p != 7) throw ConfigError("unsupported p " + std::to_string(c.p) + " (3, 5 or 7)");
    if (c.m_cap < 1 || c.m_cap > kMaxDegree) throw ConfigError("--escalate-m-max must lie in 1.." + std::to_string(kMaxDegree));
    if (c.m != "auto") {
        int m = 0;
        try {
            size_t used = 0;
            m = std::stoi(c.m, &used);
            if (used != c.m.size()) m = 0;
        } catch (const std::exception&) {
            m = 0;
        }
        if (m < 1 || m > c.m_cap) throw ConfigError("--m must be auto or an integer in 1.." + std::to_string(c.m_cap));
    }
    std::vector<std::string> expanded;
    for (const auto& s : c.suites) {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part == "all") {
                expanded = kSuites;
                break;
            }
            if (std::find(kSuites.begin(), kSuites.end(), part) == kSuites.end())
                throw ConfigError("unknown suite '" + part + "'");
            expanded.push_back(part);
        }
        if (expanded == kSuites) break;
    }
    std::vector<std::string> ordered;
    for (const auto& s : kSuites)
        if (std::find(expanded.begin(), expanded.end(), s) != expanded.end()) ordered.push_back(s);
    if (ordered.empty()) throw ConfigError("no suite selected");
    c.suites = ordered;
    if (c.pd_rows != "auto" && c.pd_rows != "all" && c.pd_rows != "spot") throw ConfigError("--pd-rows is auto, all or spot");
    if (c.cobar_samples < 1 || c.empty_samples < 1 || c.coverage_points < 1) throw ConfigError("sample counts must be positive");
}

// Degree a suite runs in: "auto" gives its own need, an explicit m is raised
// to a multiple of the need.
int suite_degree(const RunConfig& c, int need) {
    if (c.m == "auto") return need;
    const int m = std::stoi(c.m);
    const int l = std::lcm(m, need);
    if (l > c.m_cap)
        throw ConfigError("m=" + c.m + " lacks roots needed here and lcm(" + c.m + ", " + std::to_string(need) + ") = " +
                          std::to_string(l) + " exceeds --escalate-m-max");
    return l;
}

int orbit_need(const RunConfig& c) {
    const int d = orbit_field_degree(c.p, c.m_cap);
    return d ? d : 2;
}

// ---- row ids

Fq parse_scalar(const std::string& tok) {
    std::string s = tok;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw ConfigError("empty coordinate");
    Fq sign = Fq::one();
    if (s[0] == '-') {
        sign = -Fq::one();
        s = s.substr(1);
    }
    const auto at = s.find("xi");
    if (at == std::string::npos) {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw ConfigError("bad coordinate '" + tok + "'");
        return sign * Fq::of(v);
    }
    Fq coef = Fq::one();
    std::string pre = s.substr(0, at);
    if (!pre.empty()) {
        if (pre.back() != '*') throw ConfigError("bad coordinate '" + tok + "'");
        pre.pop_back();
        coef = parse_scalar(pre);
    }
    uint64_t e = 1;
    std::string post = s.substr(at + 2);
    if (!post.empty()) {
        if (post[0] != '^' || post.size() < 2) throw ConfigError("bad coordinate '" + tok + "'");
        try {
            e = std::stoull(post.substr(1));
        } catch (const std::exception&) {
            throw ConfigError("bad coordinate '" + tok + "'");
        }
    }
    return sign * coef * pow(field().primitive(), e);
}

struct RowId {
    std::string label;  // type label or A/B/C row
    bool t_row = false;
    std::vector<std::string> coords;
};

RowId parse_row_id(const std::string& id) {
    RowId r;
    const auto open = id.find(" (");
    if (open == std::string::npos) {
        r.label = id;
        return r;
    }
    r.t_row = true;
    r.label = id.substr(0, open);
    std::string inner = id.substr(open + 2);
    if (inner.empty() || inner.back() != ')') throw ConfigError("row id '" + id + "' needs a closing parenthesis");
    inner.pop_back();
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) r.coords.push_back(tok);
    return r;
}

std::string normalize_label(std::string s) {
    // accept the unicode minus of printed tables
    const std::string minus = "\xe2\x88\x92";
    for (size_t at; (at = s.find(minus)) != std::string::npos;) s.replace(at, minus.size(), "-");
    return s;
}

struct BuildFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HopfAlgebra build_row(const std::string& raw_id, int p) {
    const RowId id = parse_row_id(normalize_label(raw_id));
    if (!id.t_row) {
        if (auto H = build_named_row(id.label)) return *H;
        throw ConfigError("unknown row '" + raw_id + "' (A1..A4, B1..B3, C1..C15, or a type label with a point)");
    }
    TypeEntry e;
    try {
        e = type_by_label(id.label, p);
    } catch (const std::exception&) {
        throw ConfigError("unknown type '" + id.label + "'");
    }
    const size_t want = e.permissible ? 3 : 5;
    if (id.coords.size() != want)
        throw ConfigError(e.label + " takes " + std::to_string(want) + " coordinates (" + (e.permissible ? "A+" : "B+") + ")");
    if (e.aplus_empty)
        throw BuildFailure("A+(" + e.label + ") is empty, so no point gives a primitive deformation: " +
                           obstruction_rank(e).text);
    Point P;
    for (const auto& t : id.coords) P.push_back(parse_scalar(t));
    TypeContext ctx(e);
    auto D = admissible_datum(ctx, P);
    if (!D) {
        std::string why;
        if (std::all_of(P.begin(), P.end(), [](Fq a) { return a.is_zero(); })) {
            why = "P = 0 gives chi_P = 0, a coboundary";
        } else if (e.permissible) {
            Coords k = ctx.cobar().class_coords(ctx.phi(ctx.chi3(P)));
            bool zero = std::all_of(k.begin(), k.end(), [](Fq a) { return a.is_zero(); });
            std::ostringstream os;
            if (!zero) {
                os << "Phi(chi_P) is not a coboundary, [Phi(chi_P)] = (";
                for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << to_string(k[i]);
                os << ")";
            } else {
                os << "Phi(chi_P) = d1(s) has no solution s in u(h)^+ with rho(s) = 0";
            }
            why = os.str();
        } else {
            why = "no Psi in u(h)_{>=2} with Phi(chi_P) = d1(Psi) and rho(Psi + Theta_P) = 0";
        }
        throw BuildFailure("point " + point_to_string(P) + " is not admissible for " + e.label + ": " + why);
    }
    PDCheck chk = ctx.verify(*D);
    if (!chk.pass()) throw BuildFailure("datum for " + point_to_string(P) + " fails verification");
    return build_T_row(ctx, *D);
}

// T rows need the family parameter xi, a generator of GF(p^2)
int build_degree(const std::string& id, const RunConfig& c) {
    return suite_degree(c, parse_row_id(normalize_label(id)).t_row ? 2 : 1);
}

// ---- report

json field_json(const std::string& name) {
    int p = 0, m = 0;
    if (std::sscanf(name.c_str(), "GF(%d^%d)", &p, &m) != 2) return json{{"name", name}};
    auto F = Field::create(p, m);
    return json{{"p", p}, {"m", m}, {"modulus", F->modulus()}};
}

std::string golden_row(const fs::path& file) { return file.stem().string(); }

Checks golden_checks(const RunConfig& c) {
    Checks out;
    if (c.golden.empty()) return out;
    if (!fs::is_directory(c.golden)) throw ConfigError("golden directory '" + c.golden + "' not found");
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(c.golden))
        if (de.path().extension() == ".hopf") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string stored = buf.str();
        int p = 0, m = 0;
        std::istringstream head(stored);
        if (!(head >> p >> m) || m < 1 || m > kMaxDegree) {
            out.push_back(CheckRecord{"golden/" + golden_row(f), false, "-", "unreadable header in " + f.filename().string(), 0});
            continue;
        }
        if (p != c.p) continue;
        out.push_back(run_check("golden/" + golden_row(f), Field::create(p, m), [&] {
            const std::string built = hopf_to_string(build_row(golden_row(f), p));
            if (built == stored) return Outcome{true, "structure constants match " + f.filename().string()};
            std::istringstream a(built), b(stored);
            std::string la, lb;
            size_t line = 0;
            while (true) {
                ++line;
                const bool ga = static_cast<bool>(std::getline(a, la)), gb = static_cast<bool>(std::getline(b, lb));
                if (!ga || !gb || la != lb)
                    return Outcome{false, f.filename().string() + " differs at line " + std::to_string(line) + ": built '" +
                                              (ga ? la : "<eof>") + "', file '" + (gb ? lb : "<eof>") + "'"};
            }
        }));
    }
    return out;
}

Checks run_suites(const RunConfig& c, json& degrees) {
    Checks all;
    auto add = [&](Checks cs) {
        for (auto& r : cs) all.push_back(std::move(r));
    };
    for (const auto& s : c.suites) {
        if (s == "types") {
            add(catalog_checks(c.p));
            degrees[s] = 1;
        } else if (s == "emptiness") {
            const int m = suite_degree(c, 2);
            degrees[s] = m;
            add(emptiness_checks(c.p, m, c.seed, c.empty_samples));
        } else if (s == "cobar") {
            add(cobar_checks(c.p, c.seed, c.cobar_samples));
            degrees[s] = 1;
        } else if (s == "orbits") {
            const int m = suite_degree(c, orbit_need(c));
            degrees[s] = m;
            add(orbit_checks(c.p, m, c.m_cap, c.seed, c.coverage_points));
        } else if (s == "pd") {
            const int m = suite_degree(c, 2);
            degrees[s] = m;
            const bool all_rows = c.pd_rows == "all" || (c.pd_rows == "auto" && c.p == 3);
            add(all_rows ? pd_checks(c.p, m) : pd_checks(c.p, m, pd_spot_rows()));
        } else if (s == "appendix") {
            const int m = suite_degree(c, 2);
            degrees[s] = m;
            add(appendix_checks(c.p, m));
        }
    }
    add(golden_checks(c));
    return all;
}

json report_json(const std::string& command, const RunConfig& c, const Checks& checks, const json& degrees) {
    json cfg{{"p", c.p}, {"m", c.m}, {"seed", c.seed}, {"suites", c.suites}, {"escalate_m_max", c.m_cap}};
    if (!c.golden.empty()) cfg["golden"] = fs::path(c.golden).filename().string();
    std::set<std::string> used;
    for (const auto& r : checks) used.insert(r.field);
    json fields = json::object();
    for (const auto& f : used) fields[f] = field_json(f);
    size_t passed = 0;
    json list = json::array();
    for (const auto& r : checks) {
        passed += r.pass;
        json j{{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"field", r.field}, {"witness", r.witness}};
        if (c.timings) j["wall_time_s"] = r.seconds;
        list.push_back(std::move(j));
    }
    return json{{"schema", kSchema},
                {"command", command},
                {"config", cfg},
                {"suite_degrees", degrees},
                {"fields", fields},
                {"summary", {{"checks", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}}},
                {"checks", list}};
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << text;
}

int cmd_verify(const RunConfig& c) {
    json degrees = json::object();
    Checks checks = run_suites(c, degrees);
    emit(report_json("verify", c, checks, degrees).dump(2) + "\n", c.out);
    size_t failed = 0;
    for (const auto& r : checks)
        if (!r.pass) {
            ++failed;
            std::cerr << "FAIL " << r.name << ": " << r.witness << "\n";
        }
    std::cerr << checks.size() << " checks, " << failed << " failed\n";
    return failed ? 1 : 0;
}

int cmd_build(const RunConfig& c, const std::string& id) {
    FieldScope scope(Field::create(c.p, build_degree(id, c)));
    HopfAlgebra H = build_row(id, c.p);
    emit(hopf_to_string(H), c.out);
    return 0;
}

int cmd_catalog(const RunConfig& c) {
    FieldScope scope(Field::create(c.p, 1));
    json classes = json::array();
    for (const auto& k : enumerate_rank2_types()) {
        json M = json::array();
        for (const auto& row : k.M) {
            json r = json::array();
            for (Fq a : row) r.push_back(to_string(a));
            M.push_back(r);
        }
        classes.push_back(json{{"g", std::string(1, gkind_char(k.g))},
                               {"h", std::string(1, hkind_char(k.h))},
                               {"M", M},
                               {"fp_points", k.members},
                               {"invariant", k.invariant},
                               {"rows", k.labels}});
    }
    json rows = json::array();
    for (const auto& e : type_table(c.p))
        rows.push_back(json{{"label", e.label}, {"permissible", e.permissible}, {"aplus_empty", e.aplus_empty}});
    json j{{"schema", kSchema}, {"command", "catalog"}, {"p", c.p}, {"fields", {{"GF(" + std::to_string(c.p) + "^1)", field_json("GF(" + std::to_string(c.p) + "^1)")}}},
           {"classes", classes}, {"type_rows", rows}};
    emit(j.dump(2) + "\n", c.out);
    return 0;
}

int cmd_field_info(const RunConfig& c) {
    const int m = suite_degree(c, orbit_need(c));
    auto F = Field::create(c.p, m);
    FieldScope scope(F);
    const uint64_t p = static_cast<uint64_t>(c.p);
    json div = json::array();
    const uint64_t order = F->order() - 1;
    for (uint64_t n : {p - 1, p + 1, p * p - 1, (p * p - 1) / 2, p * p - p + 1, p * p - p - 1, (p - 1) * (p - 1)})
        div.push_back(json{{"n", n}, {"divides_q_minus_1", order % n == 0}});
    json j{{"schema", kSchema},
           {"command", "field-info"},
           {"field", field_name(*F)},
           {"p", c.p},
           {"m", m},
           {"modulus", F->modulus()},
           {"order", F->order()},
           {"primitive", to_string(F->primitive())},
           {"table_mode", F->table_mode()},
           {"roots_of_unity", div}};
    emit(j.dump(2) + "\n", c.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Primitive deformations of rank-2 restricted Lie types: classification checks"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--p", cfg.p, "characteristic")->envname("PGW_P");
    app.add_option("--m", cfg.m, "field degree or auto")->envname("PGW_M");
    app.add_option("--seed", cfg.seed, "seed for random checks")->envname("PGW_SEED");
    app.add_option("--suite", cfg.suites, "types|emptiness|cobar|orbits|pd|appendix|all, comma separated")
        ->envname("PGW_SUITE")
        ->delimiter(',');
    app.add_option("--out", cfg.out, "output path, stdout when empty")->envname("PGW_OUT");
    app.add_option("--escalate-m-max", cfg.m_cap, "largest field degree escalation may reach")->envname("PGW_ESCALATE_M_MAX");

    auto* verify = app.add_subcommand("verify", "run the enabled suites and write the JSON report");
    verify->add_option("--golden", cfg.golden, "directory of <row>.hopf files to compare against")->envname("PGW_GOLDEN");
    verify->add_option("--pd-rows", cfg.pd_rows, "auto|all|spot")->envname("PGW_PD_ROWS");
    verify->add_option("--cobar-samples", cfg.cobar_samples)->envname("PGW_COBAR_SAMPLES");
    verify->add_option("--empty-samples", cfg.empty_samples)->envname("PGW_EMPTY_SAMPLES");
    verify->add_option("--coverage-points", cfg.coverage_points)->envname("PGW_COVERAGE_POINTS");
    verify->add_flag("--timings", cfg.timings, "record wall times (reports stop being byte-identical)")->envname("PGW_TIMINGS");

    std::string row;
    auto* build = app.add_subcommand("build", "write the structure constants of a table row");
    build->add_option("row", row, "\"C5\", \"T5 (1,0,0)\", \"T10 (xi,0,1)\"")->required();
    auto* catalog = app.add_subcommand("catalog", "enumerate the rank-2 types");
    auto* info = app.add_subcommand("field-info", "the field the orbit suite uses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        validate(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*build) return cmd_build(cfg, row);
        if (*catalog) return cmd_catalog(cfg);
        if (*info) return cmd_field_info(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BuildFailure& e) {
        std::cerr << "build failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
