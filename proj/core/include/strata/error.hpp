#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Every failure carries a stable upper-case code (e.g. "PI_POWER_MISMATCH")
// that the CLI reports verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace strata
