// One line per acceptance criterion. All arithmetic is exact over Q, so
// every comparison has tolerance zero; the time limits are wall-clock.

#include "superkoszul/report.hpp"
#include "superkoszul/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sys/wait.h>

using namespace superkoszul;

namespace {

constexpr int tolerance = 0;

struct Criterion {
    int id;
    std::string what;
    double limit_seconds;
    std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> suite(const std::vector<NamedCheck>& checks, bool golden = false)
{
    Report r = run_checks(checks, 1);
    if (golden)
        apply_golden(r, SUPERKOSZUL_GOLDEN_DIR, false);
    std::string failed;
    for (const auto& c : r.checks)
        if (c.status != Status::Pass)
            failed += (failed.empty() ? "" : "; ") + c.name + " (" + status_name(c.status) + ")";
    return {r.all_pass(), failed};
}

std::pair<int, std::string> cli(const std::string& args)
{
    std::string out;
    FILE* p = popen((std::string(SUPERKOSZUL_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!p)
        return {-1, out};
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "sign coherence on 100 random spaces", 1, [] { return suite(sign_checks()); }},
        {2, "Jacobi and PBW for gl(m|n), sl(m|n), m+n <= 3", 10, [] { return suite(lie_checks()); }},
        {3, "CE cohomology of sl(1|1) is (1,2,2,2)", 5, [] { return suite(ce_checks(sl11(), "sl(1|1)", 3, true)); }},
        {4, "curvature central for sl(1|1) and gl(1|1)", 5, [] { return suite(curvature_checks()); }},
        {5, "cobar suite", 20, [] { return suite(cobar_checks()); }},
        {6, "twisted tensor acyclicity and staircases", 20, [] { return suite(twisted_tensor_checks()); }},
        {7, "Spencer gr_n exactness and augmented acyclicity", 30, [] { return suite(spencer_checks(default_spencer_spaces())); }},
        {8, "Morita for q = 1, 2", 5, [] { return suite(morita_checks({1, 2})); }},
        {9, "Koszul moment complex of sl(1|1)", 10, [] { return suite(koszul_moment_checks(sl11(), "sl(1|1)", 5)); }},
        {10, "sl(1|1) pipeline", 30, [] {
             SuiteOptions o;
             o.verify_all = true;
             return suite(sl11_checks(o), true);
         }},
        {11, "deterministic JSON across runs and --jobs", 120, [] {
             const auto a = cli("--jobs 1 check --json");
             const auto b = cli("--jobs 1 check --json");
             const auto c = cli("--jobs 4 check --json");
             const bool same = a.second == b.second && a.second == c.second && !a.second.empty();
             const bool exit0 = a.first == 0 && b.first == 0 && c.first == 0;
             std::string why;
             if (!same)
                 why = "reports differ";
             if (!exit0)
                 why += (why.empty() ? "" : "; ") + std::string("nonzero exit");
             return std::make_pair(same && exit0, why);
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::pair<bool, std::string> result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result = {false, e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool ok = result.first && in_time;
        failures += !ok;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.what << "  (tolerance " << tolerance
                  << ", " << std::fixed << std::setprecision(2) << secs << " s of " << std::setprecision(0) << c.limit_seconds << " s)";
        if (!result.first)
            std::cout << "  failed: " << result.second;
        else if (!in_time)
            std::cout << "  over time";
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
