#ifndef MHS_ERROR_HPP
#define MHS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mhs {

enum class ErrorKind {
    CompositeModulus,
    TooSmall,
    ZeroDivisor,
    RangeError,
    HypothesisUnmet,
    BudgetExceeded,
    DenominatorDivisible,
    UnknownCheckId,
    ConfigError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. The kind is the stable part; the
// message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mhs

#endif
