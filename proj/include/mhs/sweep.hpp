#ifndef MHS_SWEEP_HPP
#define MHS_SWEEP_HPP

#include "mhs/check_result.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mhs {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(std::string_view name); // throws ConfigError
std::string_view to_string(ReportFormat f) noexcept;

struct SweepConfig {
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 1000;
    int n_max = 8;
    std::vector<std::string> checks; // empty selects every check
    std::uint32_t oracle_max_p = 13; // 0 disables
    ReportFormat format = ReportFormat::Text;
    unsigned workers = 1;
    bool timings = false; // wall times make the output run-dependent
};

inline constexpr int kMaxSweepDepth = 64;
inline constexpr std::uint32_t kMaxOracleP = 31;

// Throws Error{ConfigError} with a readable message.
void validate(const SweepConfig& cfg);

struct PrimeReport {
    std::uint64_t p = 0;
    std::vector<CheckResult> results;
    double seconds = 0.0;
};

struct SweepSummary {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t unmet = 0;

    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
    SweepConfig config;
    std::vector<PrimeReport> primes; // ascending p
    SweepSummary summary;
};

SweepSummary tally(const std::vector<PrimeReport>& primes) noexcept;

// Segmented sieve over [lo, hi].
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Runs the suite on every prime in range. Output does not depend on the
// worker count.
SweepReport run_sweep(const SweepConfig& cfg);

std::string emit(const SweepReport& report, ReportFormat format);

} // namespace mhs

#endif
