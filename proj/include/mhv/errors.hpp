#pragma once

#include <stdexcept>
#include <string>

namespace mhv {

// Error with a stable machine-readable code next to the human message.
// Codes are asserted on by tests and surfaced verbatim by the CLI.
class MhvError : public std::runtime_error {
public:
    MhvError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw MhvError(code, message);
}

} // namespace mhv
