#include "superkoszul/report.hpp"

#include "superkoszul/error.hpp"

#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace superkoszul {

using nlohmann::json;

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::UnreliableWindow:
        return "unreliable-window";
    }
    return "fail";
}

std::optional<Status> parse_status(const std::string& s)
{
    for (Status x : {Status::Pass, Status::Fail, Status::UnreliableWindow})
        if (s == status_name(x))
            return x;
    return std::nullopt;
}

bool Report::all_pass() const
{
    for (const auto& c : checks)
        if (c.status != Status::Pass)
            return false;
    return true;
}

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

std::string emit_json(const Report& r)
{
    json out = json::array();
    for (const auto& c : r.checks) {
        json tables = json::array();
        for (const auto& t : c.tables)
            tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
        out.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"window", c.window}, {"tables", tables}, {"notes", c.notes}});
    }
    return out.dump(2) + "\n";
}

Report parse_json(const std::string& text)
{
    Report r;
    try {
        const json in = json::parse(text);
        if (!in.is_array())
            throw Error(ErrorKind::Parse, "report must be a JSON array");
        for (const auto& c : in) {
            CheckResult x;
            x.name = c.at("name").get<std::string>();
            const auto s = parse_status(c.at("status").get<std::string>());
            if (!s)
                throw Error(ErrorKind::Parse, "unknown status in check " + x.name);
            x.status = *s;
            x.window = c.at("window").get<std::string>();
            x.notes = c.at("notes").get<std::vector<std::string>>();
            for (const auto& t : c.at("tables"))
                x.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                                    t.at("rows").get<std::vector<std::vector<std::string>>>()});
            r.checks.push_back(std::move(x));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return r;
}

std::string render_table(const Table& t)
{
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t j = 0; j < t.columns.size(); ++j)
        width[j] = t.columns[j].size();
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size() && j < width.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    os << t.name << ":\n";
    auto line = [&](const std::vector<std::string>& cells) {
        os << "   ";
        for (std::size_t j = 0; j < cells.size(); ++j)
            os << ' ' << std::setw(static_cast<int>(j < width.size() ? width[j] : 0)) << cells[j];
        os << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows)
        line(row);
    return os.str();
}

std::string emit_text(const Report& r, bool timing)
{
    std::ostringstream os;
    int passed = 0;
    for (const auto& c : r.checks) {
        passed += c.status == Status::Pass;
        std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "UNRELIABLE-WINDOW";
        os << std::left << std::setw(18) << tag << std::right << c.name;
        if (!c.window.empty())
            os << "  [" << c.window << "]";
        if (timing)
            os << "  (" << std::fixed << std::setprecision(2) << c.seconds << " s)";
        os << '\n';
        for (const auto& n : c.notes)
            os << "    note: " << n << '\n';
        for (const auto& t : c.tables) {
            std::istringstream lines(render_table(t));
            for (std::string l; std::getline(lines, l);)
                os << "  " << l << '\n';
        }
    }
    if (r.checks.empty())
        os << "0 checks\n";
    else
        os << passed << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

Table cohomology_table(const std::string& name, const CohomologyTable& t)
{
    Table out{name, {"coh", "s", "h", "dim"}, {}};
    for (const auto& [d, n] : t)
        out.rows.push_back({std::to_string(d.coh), std::to_string(d.s), std::to_string(d.h), std::to_string(n)});
    return out;
}

Table series_table(const std::string& name, const std::string& key, const std::map<int, long>& dims)
{
    Table out{name, {key, "dim"}, {}};
    for (const auto& [k, n] : dims)
        out.rows.push_back({std::to_string(k), std::to_string(n)});
    return out;
}

namespace {

std::string slug(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        const bool keep = std::isalnum(static_cast<unsigned char>(ch)) != 0;
        if (keep)
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        else if (!out.empty() && out.back() != '_')
            out += '_';
    }
    while (!out.empty() && out.back() == '_')
        out.pop_back();
    return out;
}

}  // namespace

std::string golden_path(const std::string& dir, const std::string& check, const std::string& table)
{
    return (std::filesystem::path(dir) / (slug(check) + "--" + slug(table) + ".txt")).string();
}

void apply_golden(Report& r, const std::string& dir, bool regenerate)
{
    if (regenerate)
        std::filesystem::create_directories(dir);
    std::set<std::string> seen;
    for (auto& c : r.checks)
        for (const auto& t : c.tables) {
            const std::string path = golden_path(dir, c.name + " " + c.window, t.name);
            if (!seen.insert(path).second)
                throw Error(ErrorKind::InvalidArgument, "two tables share the golden file " + path);
            const std::string text = render_table(t);
            if (regenerate) {
                std::ofstream(path) << text;
                continue;
            }
            std::ifstream in(path);
            if (!in) {
                c.notes.push_back("no golden file for " + t.name);
                continue;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            if (ss.str() != text) {
                c.status = Status::Fail;
                c.notes.push_back("golden mismatch: " + t.name);
            }
        }
}

}  // namespace superkoszul
