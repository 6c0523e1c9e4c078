#include <iostream>

#include <CLI11.hpp>

#include "khl/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for Koszul homology and λ-ring identities", "khl"};
    app.set_version_flag("--version", khl::harness_version());

    std::string suite, config, out, format = "json";
    std::optional<int> window;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    bool no_timings = false;

    app.add_option("suite", suite, "Suite name, 'all', or 'list-suites'")->required();
    app.add_option("--config", config, "Scenario file (JSON)");
    app.add_option("--out", out, "Report path (default: stdout or the scenario's output field)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--window", window, "Degree window D for graded rings")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Seed for the randomized suites");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--no-timings", no_timings, "Write zero wall times so reports compare byte for byte");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (suite == "list-suites") {
        for (const auto& s : khl::suite_names()) std::cout << s << "\n";
        std::cout << "all\n";
        return 0;
    }

    try {
        khl::ScenarioConfig cfg;
        if (!config.empty()) {
            cfg = khl::parse_scenario(config);
            if (suite == "all") {
                cfg = khl::ScenarioConfig{.suite = "all", .seed = cfg.seed, .output = cfg.output};
            } else if (cfg.suite != suite) {
                throw khl::ValidationError("suite '" + suite + "' does not match the scenario's '" + cfg.suite + "'");
            }
        } else {
            cfg.suite = suite;
        }
        if (window) cfg.window = *window;
        if (seed) cfg.seed = *seed;
        khl::validate_scenario(cfg);

        auto report = khl::run_suite(cfg, {.jobs = jobs, .timings = !no_timings});
        const std::string path = !out.empty() ? out : cfg.output;
        if (path.empty()) std::cout << khl::emit_report(report, format);
        else khl::write_report(report, format, path);
        return report.exit_code();
    } catch (const khl::Error& e) {
        std::cerr << "khl: " << e.what() << "\n";
        return 2;
    }
}
