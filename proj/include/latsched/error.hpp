#pragma once

#include <stdexcept>
#include <string>

namespace latsched {

enum class ErrorCode {
    InvalidArgument = 1,
    Domain = 2,
    Infeasible = 3,
    BudgetExceeded = 4,
    Io = 5,
    Parse = 6,
    OracleFailure = 7,
};

/// Library-wide exception. The code maps one-to-one onto latsched_status in the C API.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace latsched
