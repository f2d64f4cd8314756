#pragma once

#include "superkoszul/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superkoszul {

enum class Status { Pass, Fail, UnreliableWindow };

const char* status_name(Status s);
std::optional<Status> parse_status(const std::string& s);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const Table&) const = default;
};

struct CheckResult {
    std::string name;
    Status status = Status::Fail;
    std::vector<Table> tables;
    std::string window;
    std::vector<std::string> notes;
    /// Wall time, shown in text output only; JSON leaves it out so reports
    /// stay byte-identical across runs.
    double seconds = 0;

    bool operator==(const CheckResult& o) const
    {
        return name == o.name && status == o.status && tables == o.tables && window == o.window && notes == o.notes;
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    bool operator==(const Report&) const = default;
};

/// 0 when every check passed, 1 otherwise.
int exit_code(const Report& r);

std::string emit_json(const Report& r);
/// Throws Error(Parse) on malformed input.
Report parse_json(const std::string& text);
std::string emit_text(const Report& r, bool timing = true);

Table cohomology_table(const std::string& name, const CohomologyTable& t);
Table series_table(const std::string& name, const std::string& key, const std::map<int, long>& dims);

/// One text file per table under `dir`, named after check and table.
/// apply_golden passes the check name followed by its window.
std::string golden_path(const std::string& dir, const std::string& check, const std::string& table);
std::string render_table(const Table& t);

/// Compares every table against its golden file (a mismatch fails the
/// check; a missing file only adds a note), or rewrites the files.
void apply_golden(Report& r, const std::string& dir, bool regenerate);

}  // namespace superkoszul
