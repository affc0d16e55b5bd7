// mhs_verify: sweep primes and check the harmonic-sum congruences.
//
// Exit status: 0 when nothing failed (unmet hypotheses are fine), 1 when at
// least one check failed, 2 on a configuration error.

#include "mhs/error.hpp"
#include "mhs/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> ids;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) ids.push_back(item);
    }
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    mhs::SweepConfig cfg;
    std::string checks;
    std::string format = "text";
    std::string out_path;

    CLI::App app{"Verify multiple harmonic sum congruences across a range of primes"};
    app.add_option("--pmin", cfg.p_min, "smallest prime to test")->capture_default_str();
    app.add_option("--pmax", cfg.p_max, "largest prime to test")->capture_default_str();
    app.add_option("--nmax", cfg.n_max, "largest nesting depth n")->capture_default_str();
    app.add_option("--checks", checks, "comma-separated check ids (default: all)");
    app.add_option("--format", format, "json, csv or text")->capture_default_str();
    app.add_option("--oracle-max-p", cfg.oracle_max_p,
                   "cross-check against exact rationals for p up to N (0 disables)")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_flag("--timings", cfg.timings, "include per-prime wall times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    mhs::SweepReport report;
    try {
        cfg.checks = split_ids(checks);
        cfg.format = mhs::parse_format(format);
        report = mhs::run_sweep(cfg);
    } catch (const mhs::Error& e) {
        std::cerr << "mhs_verify: " << e.what() << '\n';
        return e.kind() == mhs::ErrorKind::ConfigError ? kExitConfig : kExitFailed;
    }

    const std::string text = mhs::emit(report, cfg.format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "mhs_verify: cannot open " << out_path << '\n';
            return kExitConfig;
        }
        out << text;
    }
    return report.summary.failed == 0 ? 0 : kExitFailed;
}
