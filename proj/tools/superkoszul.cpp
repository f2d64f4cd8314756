#include "superkoszul/error.hpp"
#include "superkoszul/io.hpp"
#include "superkoszul/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace superkoszul;

namespace {

struct Options {
    SuiteOptions suite;
    std::string window;
    bool json = false;
    std::string golden_dir;
    bool regen_golden = false;
    int jobs = 1;
    std::string presentation;
    std::string algebra;
    std::string space;
    int max_degree = -1;
    std::vector<int> qs;
};

void parse_window(const std::string& w, SuiteOptions& o)
{
    const auto colon = w.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::Parse, "--window expects A:B");
    try {
        o.window_lo = std::stoi(w.substr(0, colon));
        o.window_hi = std::stoi(w.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "--window expects integers A:B");
    }
    if (o.window_lo > o.window_hi)
        throw Error(ErrorKind::Parse, "--window needs A <= B");
}

NamedCheck lie_file_check(const LieSuperalgebra& g)
{
    return {"lie: Jacobi and PBW for the input algebra", [g] {
        const auto v = jacobi_check(g);
        const bool pbw = pbw_check(g, 4);
        CheckResult r;
        r.status = v.empty() && pbw ? Status::Pass : Status::Fail;
        r.window = "PBW to degree 4";
        Table t{"violations", {"x", "y", "z"}, {}};
        for (const auto& j : v)
            t.rows.push_back({j.x, j.y, j.z});
        r.tables.push_back(t);
        r.tables.push_back({"pbw", {"holds"}, {{pbw ? "yes" : "no"}}});
        return r;
    }};
}

std::vector<NamedCheck> build(const std::string& cmd, const Options& o)
{
    std::vector<NamedCheck> checks;
    auto add = [&](std::vector<NamedCheck> v) {
        for (auto& c : v)
            checks.push_back(std::move(c));
    };
    const bool have_algebra = !o.algebra.empty();
    const LieSuperalgebra g = have_algebra ? lie_from_json(read_file(o.algebra)) : sl11();
    const std::string label = have_algebra ? o.algebra : "sl(1|1)";
    if (cmd == "check") {
        if (!o.presentation.empty())
            add(presentation_checks(presentation_from_json(read_file(o.presentation)), o.suite.max_word_length));
        if (have_algebra)
            checks.push_back(lie_file_check(g));
        if (o.presentation.empty() && !have_algebra)
            add(full_suite(o.suite));
    } else if (cmd == "hilbert") {
        if (o.presentation.empty())
            throw Error(ErrorKind::Parse, "hilbert needs --presentation");
        add(hilbert_checks(presentation_from_json(read_file(o.presentation)), o.suite.max_word_length));
    } else if (cmd == "ce") {
        add(ce_checks(g, label, o.max_degree < 0 ? 3 : o.max_degree, !have_algebra));
    } else if (cmd == "cobar") {
        add(cobar_checks());
        add(twisted_tensor_checks());
    } else if (cmd == "spencer") {
        if (o.space.empty())
            add(spencer_checks(default_spencer_spaces()));
        else
            add(spencer_checks({{o.space, space_from_json(read_file(o.space))}}));
    } else if (cmd == "koszul-moment") {
        add(koszul_moment_checks(g, label, o.max_degree < 0 ? 5 : o.max_degree));
    } else if (cmd == "morita") {
        add(morita_checks(o.qs.empty() ? std::vector<int>{0, 1, 2} : o.qs));
    } else if (cmd == "sl11") {
        add(sl11_checks(o.suite));
    }
    return checks;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"superkoszul: exact checks for super Koszul duality computations"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--max-word-length", o.suite.max_word_length, "completion bound on word length")->check(CLI::PositiveNumber);
    app.add_option("--window", o.window, "cohomological window A:B");
    app.add_flag("--json", o.json, "emit the report as JSON");
    app.add_option("--golden-dir", o.golden_dir, "compare tables against golden files here");
    app.add_flag("--regen-golden", o.regen_golden, "rewrite the golden files");
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--verify-all", o.suite.verify_all, "include the weight specializations");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "run the full built-in suite, or check input files"},
        {"hilbert", "Hilbert function of a presentation"},
        {"ce", "Chevalley-Eilenberg cohomology"},
        {"cobar", "cobar and twisted tensor windows"},
        {"spencer", "Spencer complex witnesses"},
        {"koszul-moment", "Koszul complex of the moment map"},
        {"morita", "odd Weyl algebras"},
        {"sl11", "the sl(1|1) pipeline"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (name == "check" || name == "hilbert")
            sub->add_option("--presentation", o.presentation, "presentation JSON file");
        if (name == "check" || name == "ce" || name == "koszul-moment")
            sub->add_option("--algebra", o.algebra, "structure-constant JSON file");
        if (name == "ce" || name == "koszul-moment")
            sub->add_option("--max-degree", o.max_degree, "top degree")->check(CLI::NonNegativeNumber);
        if (name == "spencer")
            sub->add_option("--space", o.space, "superspace JSON file");
        if (name == "morita")
            sub->add_option("--q", o.qs, "numbers of odd variables")->check(CLI::Range(0, 3));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    try {
        if (!o.window.empty())
            parse_window(o.window, o.suite);
        const std::string cmd = app.get_subcommands().front()->get_name();
        report = run_checks(build(cmd, o), o.jobs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::string golden = o.golden_dir;
    if (const char* env = std::getenv("SUPERKOSZUL_GOLDEN"))
        golden = env;
    if (!golden.empty())
        apply_golden(report, golden, o.regen_golden);
    else if (o.regen_golden) {
        std::cerr << "error: --regen-golden needs --golden-dir or SUPERKOSZUL_GOLDEN\n";
        return 2;
    }

    std::cout << (o.json ? emit_json(report) : emit_text(report));
    return exit_code(report);
}
