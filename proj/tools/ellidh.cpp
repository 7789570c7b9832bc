// Batch front-end: reads a JSON job, writes a JSON report (or a CSV sweep table).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ellidh/error.hpp"
#include "ellidh/jobs.hpp"

using namespace ellidh;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    require(static_cast<bool>(out), ErrorCode::InvalidConfig, "cannot open output file " + out_path);
    out << text;
}

Json read_config(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::InvalidConfig, "cannot open config file " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deep holes of elliptic codes: batch verification jobs"};
    std::string config_path;
    std::string out_path;
    std::string format = "json";
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "job configuration (JSON)")->required();
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--budget", budget, "maximum syndrome states (default 1e8)");
    app.add_option("--format", format, "json or csv (csv only for k_range sweeps)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for sampled words");
    CLI11_PARSE(app, argc, argv);

    try {
        JobConfig cfg = parse_config(read_config(config_path));
        if (budget) {
            require(*budget > 0, ErrorCode::InvalidConfig, "--budget must be positive");
            cfg.budget.max_states = *budget;
        }
        if (seed) cfg.seed = *seed;

        const auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        };
        if (cfg.k_range) {
            const auto rows = sweep(cfg);
            if (format == "csv") emit(sweep_csv(rows), out_path);
            else emit(make_report(cfg, sweep_json(rows), elapsed()).dump(2) + "\n", out_path);
            return 0;
        }
        require(format == "json", ErrorCode::InvalidConfig, "csv output needs a k_range sweep");
        Json results = run_job(cfg);
        emit(make_report(cfg, std::move(results), elapsed()).dump(2) + "\n", out_path);
        return 0;
    } catch (const Error& e) {
        std::cout << error_report(e.code(), e.what()).dump(2) << "\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        std::cout << error_report(ErrorCode::InternalInvariant, e.what()).dump(2) << "\n";
        return exit_status(ErrorCode::InternalInvariant);
    }
}
