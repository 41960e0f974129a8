#pragma once

#include <stdexcept>
#include <string>

namespace navstat {

// Exit-code conventions: 2 = usage/input error, 3 = numeric degeneracy.
struct NavError : std::runtime_error {
    int exit_code;
    explicit NavError(const std::string& msg, int code = 2)
        : std::runtime_error(msg), exit_code(code) {}
};

struct DegenerateError : NavError {
    explicit DegenerateError(const std::string& msg) : NavError(msg, 3) {}
};

} // namespace navstat
