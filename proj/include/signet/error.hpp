#pragma once

#include <stdexcept>
#include <string>

namespace signet {

// Domain errors carry a stable machine-readable code for the CLI.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw domain_error(code, what);
}

inline void require(bool cond, const char* code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace signet
