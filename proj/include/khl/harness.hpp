#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "khl/koszul.hpp"

namespace khl {

using Json = nlohmann::ordered_json;

const std::string& harness_version();

// Suites in catalogue order, without "all".
const std::vector<std::string>& suite_names();

struct RingSpec {
    std::string kind = "integers";  // integers | rationals | graded_poly
    std::string base = "Q";         // Q or F<p>, graded_poly only
    std::vector<std::string> vars;
    Ring build() const;
    Json to_json() const;
};

struct ScenarioConfig {
    std::string suite;
    std::optional<RingSpec> ring;  // absent: the suite runs its built-in grid
    std::vector<std::string> ideal;
    std::optional<int> rank, n, window;
    std::uint64_t seed = 0;
    std::string output;  // report path, empty for stdout
    bool has_instance() const { return ring.has_value(); }
    Json to_json() const;
};

// ParseError (with line/column or field) and ValidationError (naming the parameter).
ScenarioConfig parse_scenario_text(const std::string& text, const std::string& origin = "<string>");
ScenarioConfig parse_scenario(const std::string& path);
// Suite-specific completeness; fills the default window 2·(top generator degree) + 2.
void validate_scenario(ScenarioConfig& cfg);

struct CheckRecord {
    std::string name;
    Json params = Json::object();
    Json expected, computed;
    std::string status;  // pass | fail | conjecture:agree | conjecture:disagree
    long millis = 0;
    bool conjecture() const { return status.rfind("conjecture:", 0) == 0; }
};

struct Report {
    Json config = Json::object();
    std::vector<CheckRecord> checks;
    bool passed() const;  // every non-conjecture check passed
    int exit_code() const { return passed() ? 0 : 1; }
};

struct RunOptions {
    int jobs = 1;
    bool timings = true;  // false zeroes millis so reports compare byte for byte
};

// A named unit of work; the function fills expected, computed and status.
struct CheckJob {
    std::string name;
    Json params;
    std::function<void(CheckRecord&)> run;
    bool conjecture = false;
};

// Jobs for one suite; "all" concatenates every suite on its built-in grid.
std::vector<CheckJob> suite_jobs(const ScenarioConfig& cfg);
// Runs the jobs on a work queue and merges the records by name.
Report run_jobs(std::vector<CheckJob> jobs, const Json& config, const RunOptions& opt);
Report run_suite(const ScenarioConfig& cfg, const RunOptions& opt = {});

std::string emit_report(const Report& report, const std::string& format);  // json | csv | text
void write_report(const Report& report, const std::string& format, const std::string& path);  // IoError

// Serialisation of homology data used in the report fields.
Json to_json(const HomologyDegree& h);

}  // namespace khl
