#include "doctest.h"
#include "superkoszul/error.hpp"
#include "superkoszul/io.hpp"
#include "superkoszul/report.hpp"
#include "superkoszul/suite.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

using namespace superkoszul;

namespace {

std::string random_text(std::mt19937& rng)
{
    static const std::vector<std::string> pieces = {"a", "Z", " ", "\"", "\\", "ε", "∂", "|", ":", "\n", "0", "-"};
    std::uniform_int_distribution<int> len(0, 6), pick(0, static_cast<int>(pieces.size()) - 1);
    std::string s;
    for (int i = len(rng); i > 0; --i)
        s += pieces[pick(rng)];
    return s;
}

Report random_report(std::mt19937& rng)
{
    std::uniform_int_distribution<int> small(0, 3), status(0, 2);
    Report r;
    for (int i = small(rng); i > 0; --i) {
        CheckResult c;
        c.name = random_text(rng);
        c.status = static_cast<Status>(status(rng));
        c.window = random_text(rng);
        for (int k = small(rng); k > 0; --k)
            c.notes.push_back(random_text(rng));
        for (int k = small(rng); k > 0; --k) {
            Table t{random_text(rng), {}, {}};
            const int cols = small(rng);
            for (int j = 0; j < cols; ++j)
                t.columns.push_back(random_text(rng));
            for (int row = small(rng); row > 0; --row) {
                std::vector<std::string> cells;
                for (int j = 0; j < cols; ++j)
                    cells.push_back(random_text(rng));
                t.rows.push_back(cells);
            }
            c.tables.push_back(t);
        }
        c.seconds = small(rng) * 0.25;
        r.checks.push_back(c);
    }
    return r;
}

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    Run r;
    const std::string cmd = std::string(SUPERKOSZUL_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(SUPERKOSZUL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("empty report")
{
    Report r;
    CHECK(emit_json(r) == "[]\n");
    CHECK(emit_text(r) == "0 checks\n");
    CHECK(exit_code(r) == 0);
    CHECK(parse_json(emit_json(r)) == r);
}

TEST_CASE("JSON round trip on random reports")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Report r = random_report(rng);
        const std::string j = emit_json(r);
        CHECK(parse_json(j) == r);
        CHECK(emit_json(parse_json(j)) == j);
    }
}

TEST_CASE("timing stays out of the JSON")
{
    Report a, b;
    a.checks.push_back({"x", Status::Pass, {}, "w", {}, 0.5});
    b.checks.push_back({"x", Status::Pass, {}, "w", {}, 7.0});
    CHECK(emit_json(a) == emit_json(b));
    CHECK(emit_text(a) != emit_text(b));
    CHECK(emit_text(a, false) == emit_text(b, false));
}

TEST_CASE("statuses render distinctly")
{
    Report r;
    r.checks.push_back({"a", Status::Fail, {}, "", {}, 0});
    r.checks.push_back({"b", Status::UnreliableWindow, {}, "", {}, 0});
    const std::string t = emit_text(r, false);
    CHECK(t.find("FAIL              a") != std::string::npos);
    CHECK(t.find("UNRELIABLE-WINDOW b") != std::string::npos);
    CHECK(exit_code(r) == 1);
    CHECK(parse_status("unreliable-window") == Status::UnreliableWindow);
    CHECK(!parse_status("maybe"));
}

TEST_CASE("malformed reports are rejected")
{
    CHECK_THROWS_AS(parse_json("{"), Error);
    CHECK_THROWS_AS(parse_json("{}"), Error);
    CHECK_THROWS_AS(parse_json(R"([{"name":"a","status":"meh","window":"","notes":[],"tables":[]}])"), Error);
}

TEST_CASE("run_checks keeps order and classifies errors")
{
    std::vector<NamedCheck> checks = {
        {"ok", [] { return CheckResult{"", Status::Pass, {}, "", {}, 0}; }},
        {"small", []() -> CheckResult { throw Error(ErrorKind::WindowTooSmall, "tiny"); }},
        {"broken", []() -> CheckResult { throw Error(ErrorKind::RelationFailure, "no"); }},
    };
    for (int jobs : {1, 3}) {
        const Report r = run_checks(checks, jobs);
        REQUIRE(r.checks.size() == 3);
        CHECK(r.checks[0].name == "ok");
        CHECK(r.checks[0].status == Status::Pass);
        CHECK(r.checks[1].status == Status::UnreliableWindow);
        CHECK(r.checks[2].status == Status::Fail);
    }
}

TEST_CASE("input files")
{
    const LieSuperalgebra g = lie_from_json(read_file(data("sl11.json")));
    const LieSuperalgebra ref = sl11();
    REQUIRE(g.dim() == ref.dim());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(g.bracket(i, j) == ref.bracket(i, j));
    CHECK(!jacobi_check(lie_from_json(read_file(data("bad_jacobi.json")))).empty());

    const Presentation p = presentation_from_json(read_file(data("sl11_enveloping.json")));
    CHECK(p.size() == 3);
    CHECK(p.relations().size() == 5);
    CHECK(p.generators()[p.at("h")].degree == Degree{0, 0, 2});
    CHECK(presentation_from_json(read_file(data("empty.json"))).size() == 0);

    const SuperSpace s = space_from_json(read_file(data("line_odd.json")));
    REQUIRE(s.coordinates.size() == 2);
    CHECK(s.coordinates[1].s == 1);

    CHECK_THROWS_AS(read_file(data("missing.json")), Error);
    CHECK_THROWS_AS(presentation_from_json("{\"generators\": [1]}"), Error);
    CHECK_THROWS_AS(lie_from_json(R"({"basis":[{"name":"x","s":0}],"brackets":[{"x":"x","y":"x","value":"x*x"}]})"), Error);
}

TEST_CASE("command line contract")
{
    const Run ce = cli("ce --algebra " + data("sl11.json") + " --max-degree 3 --json");
    CHECK(ce.code == 0);
    const Report r = parse_json(ce.out);
    REQUIRE(r.checks.size() == 1);
    const Table& dims = r.checks[0].tables.at(0);
    CHECK(dims.name == "H^n dims");
    CHECK(dims.rows == std::vector<std::vector<std::string>>{{"0", "1"}, {"1", "2"}, {"2", "2"}, {"3", "2"}});

    CHECK(cli("check --presentation " + data("empty.json")).code == 0);
    CHECK(cli("check --algebra " + data("bad_jacobi.json")).code == 1);
    CHECK(cli("check --presentation " + data("missing.json")).code == 2);
    CHECK(cli("no-such-command").code == 2);
    CHECK(cli("--window 2:1 sl11").code == 2);
    CHECK(cli("--regen-golden sl11").code == 2);
    CHECK(cli("--help").code == 0);
}

TEST_CASE("sl11 report and golden files")
{
    const Run run = cli("sl11 --json --golden-dir " + std::string(SUPERKOSZUL_GOLDEN_DIR));
    CHECK(run.code == 0);
    const Report r = parse_json(run.out);
    const CheckResult* monad = nullptr;
    for (const auto& c : r.checks)
        if (c.name == "sl11: Weyl monad")
            monad = &c;
    REQUIRE(monad);
    CHECK(monad->notes.empty());
    const Table& t = monad->tables.at(0);
    CHECK(t.name == "Wbar dims");
    std::ifstream in(golden_path(SUPERKOSZUL_GOLDEN_DIR, monad->name + " " + monad->window, t.name));
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == render_table(t));
    CHECK(cli("sl11").out.find("Wbar dims:") != std::string::npos);

    // A tampered golden file fails the check.
    const auto dir = std::filesystem::temp_directory_path() / "superkoszul_golden_test";
    std::filesystem::remove_all(dir);
    CHECK(cli("sl11 --golden-dir " + dir.string() + " --regen-golden").code == 0);
    const std::string path = golden_path(dir.string(), monad->name + " " + monad->window, t.name);
    std::ofstream(path, std::ios::app) << "extra\n";
    const Run bad = cli("sl11 --json --golden-dir " + dir.string());
    CHECK(bad.code == 1);
    CHECK(bad.out.find("golden mismatch: Wbar dims") != std::string::npos);
    std::filesystem::remove_all(dir);
}
