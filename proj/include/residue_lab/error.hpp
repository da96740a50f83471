#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

enum class Err {
    NotPrime,
    TooSmall,
    TooLarge,
    ZeroInverse,
    ZeroDilation,
    ZeroDenominator,
    ZeroShift,
    EqualShifts,
    BadWindow,
    ExactTooLarge,
    TooLargeGap,
    EmptyA,
    NoPair,
    PreconditionViolated,
    HypothesisFailed,
    DegenerateH,
    ConfigError,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace rlab
