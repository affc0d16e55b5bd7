#include "mhs/sweep.hpp"

#include "mhs/error.hpp"
#include "mhs/modring.hpp"
#include "mhs/verifiers.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace mhs {

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

std::vector<std::string> effective_checks(const SweepConfig& cfg) {
    if (!cfg.checks.empty()) return cfg.checks;
    const auto ids = all_check_ids();
    return {ids.begin(), ids.end()};
}

PrimeReport sweep_one(std::uint64_t p, const SweepConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const Prime ctx(p);
    SuiteOptions options;
    options.oracle_max_p = cfg.oracle_max_p;
    PrimeReport report;
    report.p = p;
    report.results = run_suite(ctx, cfg.n_max, cfg.checks, options);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string witness_text(const CheckResult& r) {
    return r.witness ? std::to_string(*r.witness) : std::string{};
}

std::string emit_json(const SweepReport& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    const SweepConfig& cfg = report.config;
    doc["config"] = {
        {"p_min", cfg.p_min},
        {"p_max", cfg.p_max},
        {"n_max", cfg.n_max},
        {"checks", effective_checks(cfg)},
        {"oracle_max_p", cfg.oracle_max_p},
    };
    doc["summary"] = {
        {"primes", report.primes.size()},
        {"passed", report.summary.passed},
        {"failed", report.summary.failed},
        {"unmet", report.summary.unmet},
    };
    ordered_json results = ordered_json::array();
    for (const auto& pr : report.primes) {
        for (const auto& r : pr.results) {
            ordered_json row;
            row["p"] = r.p;
            row["check_id"] = r.check_id;
            row["n"] = r.n;
            row["passed"] = r.passed();
            row["status"] = to_string(r.status);
            row["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
            row["detail"] = r.detail;
            results.push_back(std::move(row));
        }
    }
    doc["results"] = std::move(results);
    if (cfg.timings) {
        ordered_json timings = ordered_json::array();
        for (const auto& pr : report.primes) timings.push_back({{"p", pr.p}, {"seconds", pr.seconds}});
        doc["timings"] = std::move(timings);
    }
    return doc.dump(2) + "\n";
}

std::string emit_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "p,check_id,n,passed,witness\n";
    for (const auto& pr : report.primes) {
        for (const auto& r : pr.results) {
            const char* verdict = r.status == Status::Passed ? "true"
                                  : r.status == Status::Failed ? "false"
                                                               : "unmet";
            out << r.p << ',' << r.check_id << ',' << r.n << ',' << verdict << ',' << witness_text(r)
                << '\n';
        }
    }
    return out.str();
}

std::string emit_text(const SweepReport& report) {
    const SweepConfig& cfg = report.config;
    std::ostringstream out;
    out << "primes " << cfg.p_min << ".." << cfg.p_max << " (" << report.primes.size()
        << " primes), n_max " << cfg.n_max << ", oracle_max_p " << cfg.oracle_max_p << "\n\n";

    std::map<std::string, SweepSummary> by_id;
    for (const auto& pr : report.primes) {
        for (const auto& r : pr.results) {
            auto& s = by_id[r.check_id];
            if (r.status == Status::Passed) ++s.passed;
            else if (r.status == Status::Failed) ++s.failed;
            else ++s.unmet;
        }
    }
    std::size_t width = 8;
    for (const auto& [id, s] : by_id) width = std::max(width, id.size());

    const auto row = [&](std::string_view label, const SweepSummary& s) {
        out << std::left << std::setw(static_cast<int>(width)) << label << std::right
            << std::setw(10) << s.passed << std::setw(10) << s.failed << std::setw(10) << s.unmet << '\n';
    };
    out << std::left << std::setw(static_cast<int>(width)) << "check" << std::right << std::setw(10)
        << "passed" << std::setw(10) << "failed" << std::setw(10) << "unmet" << '\n';
    for (const auto& [id, s] : by_id) row(id, s);
    out << std::string(width + 30, '-') << '\n';
    row("total", report.summary);

    bool header = false;
    for (const auto& pr : report.primes) {
        for (const auto& r : pr.results) {
            if (r.status != Status::Failed) continue;
            if (!header) {
                out << "\nfailures:\n";
                header = true;
            }
            out << "  p=" << r.p << ' ' << r.check_id << " n=" << r.n << " witness=" << witness_text(r);
            if (!r.detail.empty()) out << " (" << r.detail << ')';
            out << '\n';
        }
    }
    if (cfg.timings) {
        double total = 0;
        for (const auto& pr : report.primes) total += pr.seconds;
        out << "\ncpu-seconds across primes: " << std::fixed << std::setprecision(3) << total << '\n';
    }
    return out.str();
}

} // namespace

ReportFormat parse_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    config_error("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string_view to_string(ReportFormat f) noexcept {
    switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Text: return "text";
    }
    return "text";
}

void validate(const SweepConfig& cfg) {
    if (cfg.p_min < 3) config_error("--pmin must be at least 3");
    if (cfg.p_min > cfg.p_max) {
        config_error("empty prime range: pmin " + std::to_string(cfg.p_min) + " > pmax " +
                     std::to_string(cfg.p_max));
    }
    if (cfg.p_max > Prime::kMaxModulus) config_error("--pmax must fit in 32 bits");
    if (cfg.n_max < 1 || cfg.n_max > kMaxSweepDepth) {
        config_error("--nmax must be in 1.." + std::to_string(kMaxSweepDepth));
    }
    if (cfg.oracle_max_p > kMaxOracleP) {
        config_error("--oracle-max-p must be at most " + std::to_string(kMaxOracleP));
    }
    if (cfg.workers < 1) config_error("--workers must be positive");
    try {
        validate_selection(cfg.checks);
    } catch (const Error& e) {
        config_error(e.what());
    }
}

SweepSummary tally(const std::vector<PrimeReport>& primes) noexcept {
    SweepSummary s;
    for (const auto& pr : primes) {
        for (const auto& r : pr.results) {
            switch (r.status) {
            case Status::Passed: ++s.passed; break;
            case Status::Failed: ++s.failed; break;
            case Status::Unmet: ++s.unmet; break;
            }
        }
    }
    return s;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    lo = std::max<std::uint64_t>(lo, 2);

    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
    while (root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;

    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }

    constexpr std::uint64_t kSegment = 1 << 16;
    std::vector<bool> seg;
    for (std::uint64_t start = lo; start <= hi; start += kSegment) {
        const std::uint64_t end = std::min(hi, start + kSegment - 1);
        seg.assign(end - start + 1, true);
        for (std::uint64_t q : base) {
            std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
            for (std::uint64_t j = first; j <= end; j += q) seg[j - start] = false;
        }
        for (std::uint64_t i = start; i <= end; ++i) {
            if (seg[i - start]) out.push_back(i);
        }
        if (end == hi) break;
    }
    return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    SweepReport report;
    report.config = cfg;

    const std::vector<std::uint64_t> primes = primes_in_range(cfg.p_min, cfg.p_max);
    report.primes.resize(primes.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            try {
                report.primes[i] = sweep_one(primes[i], cfg);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const unsigned pool = std::min<std::size_t>(cfg.workers, std::max<std::size_t>(primes.size(), 1));
    if (pool <= 1) {
        work();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(pool);
        for (unsigned t = 0; t < pool; ++t) threads.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    report.summary = tally(report.primes);
    return report;
}

std::string emit(const SweepReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: return emit_json(report);
    case ReportFormat::Csv: return emit_csv(report);
    case ReportFormat::Text: return emit_text(report);
    }
    return emit_text(report);
}

} // namespace mhs
