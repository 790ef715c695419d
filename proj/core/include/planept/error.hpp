#ifndef PLANEPT_ERROR_HPP
#define PLANEPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace planept {

// Every math/input error carries a stable machine-readable code
// ("NonPrimeModulus", "DivisionByZero", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool ok, const std::string& code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

} // namespace planept

#endif
