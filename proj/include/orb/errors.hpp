#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orb {

// Domain error with a stable machine-readable code. The CLI maps these to
// structured JSON errors and exit code 1; anything else is an internal bug.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw DomainError(code, message);
}

} // namespace orb
