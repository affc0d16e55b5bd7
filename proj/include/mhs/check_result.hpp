#ifndef MHS_CHECK_RESULT_HPP
#define MHS_CHECK_RESULT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mhs {

enum class Status {
    Passed,
    Failed,
    Unmet, // the congruence's hypothesis does not hold for (p, n)
};

std::string_view to_string(Status s) noexcept;

// Outcome of one congruence check at one (p, n).
//
// A failed result always carries a witness. For coefficient checks it is the
// first offending coefficient index; for scalar congruences it is the
// offending residue; for checks made of several sub-identities it is the
// ordinal of the first failing one, named in detail.
struct CheckResult {
    std::string check_id;
    std::uint64_t p = 0;
    int n = 0;
    Status status = Status::Passed;
    std::optional<std::uint64_t> witness;
    std::string detail;

    bool passed() const noexcept { return status == Status::Passed; }

    static CheckResult pass(std::string_view id, std::uint64_t p, int n) {
        return {std::string(id), p, n, Status::Passed, std::nullopt, {}};
    }
    static CheckResult fail(std::string_view id, std::uint64_t p, int n, std::uint64_t witness,
                            std::string detail = {}) {
        return {std::string(id), p, n, Status::Failed, witness, std::move(detail)};
    }
    static CheckResult unmet(std::string_view id, std::uint64_t p, int n, std::string detail = {}) {
        return {std::string(id), p, n, Status::Unmet, std::nullopt, std::move(detail)};
    }

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

} // namespace mhs

#endif
