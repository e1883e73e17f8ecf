#pragma once

#include <stdexcept>
#include <string>

namespace lpadic {

enum class Err {
    InvalidArg = 1, // malformed request (bad prime, bad name, bad id)
    Domain = 2,     // mathematically undefined for this input (inverting 0, ...)
    Precision = 3,  // trunc too low to decide the question
    NoRoot = 4,     // residue polynomial has no root in F_{p^2}
    Internal = 5,
};

class EngineError : public std::runtime_error {
public:
    EngineError(Err code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
    throw EngineError(code, what);
}

} // namespace lpadic
