#include "doctest.h"
#include "pgw/hopf.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace pgw;
namespace fs = std::filesystem;

namespace {

const std::string kCli = PGW_CLI_PATH;
const std::string kGolden = PGW_GOLDEN_DIR;

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / ("pgw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Run {
    int code = -1;
    std::string err;
};

// args are passed through the shell; quote them at the call site
Run run(const std::string& args, const std::string& env = "") {
    const fs::path err = scratch() / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " 2>'" + err.string() + "'";
    const int st = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.err = slurp(err);
    return r;
}

Terms gen(const HopfAlgebra& H, int i) { return H.basis(H.generators.at(static_cast<size_t>(i))); }

}  // namespace

TEST_CASE("p = 2 is a config error") {
    CHECK(run("verify --p 2 --out /dev/null").code == 2);
    CHECK(run("verify --out /dev/null", "PGW_P=2").code == 2);
    CHECK(run("verify --p 3 --suite bogus --out /dev/null").code == 2);
    CHECK(run("verify --p 3 --m 0 --out /dev/null").code == 2);
}

TEST_CASE("build T5 (1,0,0) writes a 27-dimensional file that round-trips") {
    const fs::path out = scratch() / "t5.hopf";
    REQUIRE(run("build 'T5 (1,0,0)' --p 3 --out '" + out.string() + "'").code == 0);
    const std::string text = slurp(out);
    HopfAlgebra H = hopf_from_string(text);
    FieldScope scope(Field::create(H.p, H.m));
    CHECK(H.dim == 27);
    CHECK(hopf_to_string(H) == text);
    CHECK(check_hopf_axioms(H).pass);
    // the same request twice gives the same bytes
    const fs::path again = scratch() / "t5b.hopf";
    REQUIRE(run("build 'T5 (1,0,0)' --p 3 --out '" + again.string() + "'").code == 0);
    CHECK(slurp(again) == text);
}

TEST_CASE("build C5 matches the golden file") {
    const fs::path out = scratch() / "c5.hopf";
    REQUIRE(run("build C5 --p 3 --out '" + out.string() + "'").code == 0);
    CHECK(slurp(out) == slurp(fs::path(kGolden) / "C5.hopf"));
}

TEST_CASE("golden C5 satisfies the C5 relations") {
    HopfAlgebra H = hopf_from_string(slurp(fs::path(kGolden) / "C5.hopf"));
    FieldScope scope(Field::create(H.p, H.m));
    REQUIRE(H.p == 3);
    REQUIRE(H.dim == 27);
    REQUIRE(H.generators.size() == 3);
    const Terms x = gen(H, 0), y = gen(H, 1), z = gen(H, 2);
    auto comm = [&](const Terms& a, const Terms& b) { return terms_add(H.mul(a, b), H.mul(b, a), -Fq::one()); };
    CHECK(comm(x, y) == z);
    CHECK(comm(x, z).empty());
    CHECK(comm(y, z).empty());
    for (const Terms& g : {x, y, z}) {
        CHECK(H.power(g, 3).empty());
        Terms2 want;
        for (const auto& [i, c] : g) {
            want.emplace_back(static_cast<uint64_t>(i) * H.dim + H.unit, c);
            want.emplace_back(static_cast<uint64_t>(H.unit) * H.dim + i, c);
        }
        std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        CHECK(H.comul(g) == want);
    }
    // ordered monomials x^a y^b z^c span
    std::set<uint32_t> hit;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                Terms w = H.mul(H.mul(H.power(x, a), H.power(y, b)), H.power(z, c));
                REQUIRE(w.size() == 1);
                hit.insert(w[0].first);
            }
    CHECK(hit.size() == 27);
    CHECK(check_hopf_axioms(H).pass);
}

TEST_CASE("an empty type refuses to build and cites emptiness") {
    Run r = run("build 'T(-1) (1,0,0)' --p 3 --out /dev/null");
    CHECK(r.code == 1);
    CHECK(r.err.find("empty") != std::string::npos);
    Run u = run("build 'T(\xe2\x88\x92" "1) (1,0,0)' --p 3 --out /dev/null");
    CHECK(u.code == 1);
    CHECK(u.err.find("empty") != std::string::npos);
}

TEST_CASE("an inadmissible point names the failing condition") {
    Run r = run("build 'T5 (0,1,0)' --p 3 --out /dev/null");
    CHECK(r.code == 1);
    CHECK(r.err.find("not a coboundary") != std::string::npos);
}

TEST_CASE("golden comparison inside verify") {
    const fs::path dir = scratch() / "golden";
    fs::create_directories(dir);
    fs::copy_file(fs::path(kGolden) / "C5.hopf", dir / "C5.hopf", fs::copy_options::overwrite_existing);
    const fs::path rep = scratch() / "golden_report.json";
    const std::string args = "verify --p 3 --suite types --golden '" + dir.string() + "' --out '" + rep.string() + "'";
    CHECK(run(args).code == 0);

    // flip one structure constant
    std::string text = slurp(dir / "C5.hopf");
    const auto at = text.find("mult ");
    const auto line = text.find('\n', at) + 1;
    const auto end = text.find('\n', line);
    text[end - 1] = text[end - 1] == '1' ? '2' : '1';
    std::ofstream(dir / "C5.hopf", std::ios::binary) << text;
    Run r = run(args);
    CHECK(r.code == 1);
    CHECK(r.err.find("golden/C5") != std::string::npos);
    auto j = nlohmann::json::parse(slurp(rep));
    bool named = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "golden/C5") named = c["status"] == "fail";
    CHECK(named);
}

TEST_CASE("reports are deterministic and carry the schema") {
    const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
    REQUIRE(run("verify --p 3 --suite types,cobar --seed 5 --out '" + a.string() + "'").code == 0);
    REQUIRE(run("verify --out '" + b.string() + "'", "PGW_P=3 PGW_SUITE=types,cobar PGW_SEED=5").code == 0);
    CHECK(slurp(a) == slurp(b));
    auto j = nlohmann::json::parse(slurp(a));
    CHECK(j["schema"] == "pgw-report/1");
    CHECK(j["fields"].contains("GF(3^1)"));
    CHECK(j["fields"]["GF(3^1)"]["modulus"].is_array());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
        CHECK(c.contains("field"));
        CHECK(c.contains("witness"));
        CHECK_FALSE(c.contains("wall_time_s"));
        CHECK(j["fields"].contains(c["field"].get<std::string>()));
    }
    const fs::path t = scratch() / "t.json";
    REQUIRE(run("verify --p 3 --suite types --timings --out '" + t.string() + "'").code == 0);
    CHECK(nlohmann::json::parse(slurp(t))["checks"][0].contains("wall_time_s"));
}

TEST_CASE("field-info at p = 3 picks GF(3^12)") {
    const fs::path out = scratch() / "info.json";
    REQUIRE(run("field-info --p 3 --out '" + out.string() + "'").code == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["m"] == 12);
    for (const auto& d : j["roots_of_unity"]) CHECK(d["divides_q_minus_1"] == true);
}
