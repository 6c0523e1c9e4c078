#include "khl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace khl {

const std::string& harness_version() {
    static const std::string v = "0.1.0";
    return v;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"thm32", "rem36",  "thm51",     "ex52", "thm64",
                                                "cor63", "lemma61", "lemma22",  "prop24", "doldkan",
                                                "crosseffects", "lambda", "rem65", "ex66_conjecture"};
    return names;
}

// ---- configuration ----

Ring RingSpec::build() const {
    if (kind == "integers") return Ring::integers();
    if (kind == "rationals") return Ring::rationals();
    if (kind == "graded_poly") {
        long ch = 0;
        if (base == "Q") ch = 0;
        else if (base.size() > 1 && base[0] == 'F') ch = std::stol(base.substr(1));
        else throw ValidationError("ring.base: expected Q or F<p>, got '" + base + "'");
        if (vars.empty()) throw ValidationError("ring.vars: graded_poly needs at least one variable");
        return Ring::graded_poly(ch, vars);
    }
    throw ValidationError("ring.kind: unknown '" + kind + "'");
}

Json RingSpec::to_json() const {
    Json j{{"kind", kind}};
    if (kind == "graded_poly") {
        j["base"] = base;
        j["vars"] = vars;
    }
    return j;
}

Json ScenarioConfig::to_json() const {
    Json j{{"suite", suite}};
    if (ring) j["ring"] = ring->to_json();
    if (!ideal.empty()) j["ideal"] = ideal;
    if (rank) j["rank"] = *rank;
    if (n) j["n"] = *n;
    if (window) j["window"] = *window;
    j["seed"] = seed;
    return j;
}

namespace {

std::string line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

int int_field(const Json& j, const char* key, const std::string& origin) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(origin + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text, const std::string& origin) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ":" + line_col(text, e.byte ? e.byte - 1 : 0) + ": malformed JSON");
    }
    if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
    static const std::set<std::string> known{"suite", "ring", "ideal", "rank", "n", "window", "seed", "output"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw ParseError(origin + ": unknown field '" + k + "'");
    ScenarioConfig cfg;
    if (!j.contains("suite")) throw ValidationError("missing parameter 'suite'");
    if (!j["suite"].is_string()) throw ParseError(origin + ": field 'suite' must be a string");
    cfg.suite = j["suite"].get<std::string>();
    if (j.contains("ring")) {
        const auto& r = j["ring"];
        RingSpec spec;
        if (r.is_string()) {
            spec.kind = r.get<std::string>();
        } else if (r.is_object()) {
            if (!r.contains("kind") || !r["kind"].is_string()) throw ParseError(origin + ": field 'ring.kind' must be a string");
            spec.kind = r["kind"].get<std::string>();
            if (r.contains("base")) {
                if (!r["base"].is_string()) throw ParseError(origin + ": field 'ring.base' must be a string");
                spec.base = r["base"].get<std::string>();
            }
            if (r.contains("vars")) {
                if (!r["vars"].is_array()) throw ParseError(origin + ": field 'ring.vars' must be a list");
                for (const auto& v : r["vars"]) {
                    if (!v.is_string()) throw ParseError(origin + ": field 'ring.vars' must hold strings");
                    spec.vars.push_back(v.get<std::string>());
                }
            }
        } else {
            throw ParseError(origin + ": field 'ring' must be an object");
        }
        cfg.ring = spec;
    }
    if (j.contains("ideal")) {
        if (!j["ideal"].is_array()) throw ParseError(origin + ": field 'ideal' must be a list");
        for (const auto& g : j["ideal"]) {
            if (g.is_string()) cfg.ideal.push_back(g.get<std::string>());
            else if (g.is_number_integer()) cfg.ideal.push_back(std::to_string(g.get<long>()));
            else throw ParseError(origin + ": field 'ideal' must hold strings");
        }
    }
    if (j.contains("rank")) cfg.rank = int_field(j, "rank", origin);
    if (j.contains("n")) cfg.n = int_field(j, "n", origin);
    if (j.contains("window")) cfg.window = int_field(j, "window", origin);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw ParseError(origin + ": field 'seed' must be an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
        if (!j["output"].is_string()) throw ParseError(origin + ": field 'output' must be a string");
        cfg.output = j["output"].get<std::string>();
    }
    return cfg;
}

ScenarioConfig parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open scenario file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario_text(ss.str(), path);
}

void validate_scenario(ScenarioConfig& cfg) {
    const auto& names = suite_names();
    if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw ValidationError("suite: unknown '" + cfg.suite + "'");
    if (cfg.rank && *cfg.rank < 1) throw ValidationError("rank must be positive");
    if (cfg.n && *cfg.n < 1) throw ValidationError("n must be positive");
    if (cfg.window && *cfg.window < 0) throw ValidationError("window must be non-negative");
    if (cfg.suite == "all" || cfg.suite == "lambda") return;
    if (!cfg.ring) {
        if (!cfg.ideal.empty() || cfg.rank || cfg.n) throw ValidationError("missing parameter 'ring' for the given instance");
        return;
    }
    Ring R;
    try {
        R = cfg.ring->build();
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(std::string("ring: ") + e.what());
    }
    const std::string& s = cfg.suite;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw ValidationError(s + ": " + what);
    };
    const bool uses_ideal = s != "lemma61" && s != "lemma22" && s != "doldkan" && s != "crosseffects";
    if (uses_ideal) {
        need(!cfg.ideal.empty(), "missing parameter 'ideal'");
        need(cfg.rank.has_value(), "missing parameter 'rank'");
        ConormalData ideal;
        try {
            ideal = conormal_data(R, cfg.ideal);
        } catch (const Error& e) {
            throw ValidationError(s + ": ideal rejected (" + e.what() + ")");
        }
        if (s == "thm32" || s == "rem36" || s == "prop24" || s == "ex52")
            need(ideal.rank() == 1, "needs a principal ideal, got " + std::to_string(ideal.rank()) + " generators");
        if (s == "thm64" || s == "ex66_conjecture") {
            need(R.is_graded() && ideal.rank() == 2, "needs a 2-generator graded ideal: missing parameter 'ideal[1]'");
        }
        if (s == "thm32" || s == "rem36" || s == "prop24" || s == "thm51") need(cfg.n.has_value(), "missing parameter 'n'");
        if (s == "ex52") need(!cfg.n || *cfg.n == 2, "n is fixed to 2");
        if (s == "ex66_conjecture") need(!cfg.n || *cfg.n == 3, "n is fixed to 3");
        if (s == "cor63") need(R.is_graded() && R.characteristic() != 2, "needs graded coefficients with 2 invertible");
        if (s == "rem65" || s == "ex52" || s == "thm64" || s == "ex66_conjecture")
            need(R.is_graded(), "needs a graded polynomial ring");
        if (s == "rem65") need(ideal.rank() <= 2, "handles ideals with one or two generators");
        if (R.is_graded() && !cfg.window) {
            int top = 0, sum = 0;
            for (int d : ideal.conormal->degrees()) {
                top = std::max(top, d);
                sum += d;
            }
            // the cubic run has homology up to twice the degree sum
            cfg.window = s == "ex66_conjecture" ? 2 * sum + 2 : 2 * top + 2;
        }
    } else if (s == "lemma61") {
        need(R.is_graded(), "needs a graded polynomial ring");
    } else {
        need(!R.is_graded(), "needs integer or rational coefficients");
    }
}

// ---- running ----

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.conjecture() || c.status == "pass"; });
}

Report run_jobs(std::vector<CheckJob> jobs, const Json& config, const RunOptions& opt) {
    Report report;
    report.config = config;
    report.checks.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t idx; (idx = next.fetch_add(1)) < jobs.size();) {
            const CheckJob& job = jobs[idx];
            CheckRecord rec;
            rec.name = job.name;
            rec.params = job.params;
            auto start = std::chrono::steady_clock::now();
            try {
                job.run(rec);
            } catch (const std::exception& e) {
                rec.computed = Json{{"error", e.what()}};
                rec.status = job.conjecture ? "conjecture:disagree" : "fail";
            }
            if (rec.status.empty()) rec.status = "fail";
            auto stop = std::chrono::steady_clock::now();
            rec.millis = opt.timings ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() : 0;
            report.checks[idx] = std::move(rec);
        }
    };
    const int n = std::max(1, std::min<int>(opt.jobs, static_cast<int>(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    return report;
}

Report run_suite(const ScenarioConfig& cfg, const RunOptions& opt) {
    return run_jobs(suite_jobs(cfg), cfg.to_json(), opt);
}

// ---- output ----

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string compact(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string emit_report(const Report& report, const std::string& format) {
    if (format == "json") {
        Json checks = Json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"params", c.params},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"status", c.status},
                              {"millis", c.millis}});
        Json j{{"version", harness_version()},
               {"config", report.config},
               {"checks", checks},
               {"status", report.passed() ? "pass" : "fail"}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "name,status,millis,params,expected,computed\n";
        for (const auto& c : report.checks)
            os << csv_cell(c.name) << "," << c.status << "," << c.millis << "," << csv_cell(c.params.dump()) << ","
               << csv_cell(compact(c.expected)) << "," << csv_cell(compact(c.computed)) << "\n";
        return os.str();
    }
    if (format == "text") {
        size_t pass = 0, fail = 0, conj = 0;
        for (const auto& c : report.checks) {
            std::string tag = c.status == "pass" ? "PASS" : c.conjecture() ? "INFO" : "FAIL";
            if (c.status == "pass") ++pass;
            else if (c.conjecture()) ++conj;
            else ++fail;
            os << tag << "  " << c.name;
            if (c.conjecture()) os << "  (" << c.status << ")";
            if (tag != "PASS") os << "\n      expected " << compact(c.expected) << "\n      computed " << compact(c.computed);
            os << "\n";
        }
        os << pass << " passed, " << fail << " failed, " << conj << " informational\n";
        return os.str();
    }
    throw ValidationError("format: expected json, csv or text");
}

void write_report(const Report& report, const std::string& format, const std::string& path) {
    std::string body = emit_report(report, format);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << body;
    if (!out) throw IoError("write failed for " + path);
}

Json to_json(const HomologyDegree& h) {
    Json torsion = Json::array();
    for (const auto& t : h.torsion) torsion.push_back(t.get_str());
    Json hilbert = Json::object();
    for (const auto& [t, d] : h.hilbert) hilbert[std::to_string(t)] = d;
    return Json{{"torsion", torsion}, {"free_rank", h.free_rank}, {"dim", h.dim}, {"hilbert", hilbert}};
}

}  // namespace khl
