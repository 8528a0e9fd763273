#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace credit {

/// Domain error with a stable machine-readable code (e.g. "alpha-out-of-range")
/// alongside the human-readable message. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace credit
