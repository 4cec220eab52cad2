#pragma once

#include "lambda0/error.hpp"
#include "lambda0/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lambda0 {

/// Invalid flags or arguments; the CLI maps it to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct CommandOptions {
    int imax = 6;
    int jmax = 6;
    int nmax = 6;
    int dmax = 15;
    int degree = 6;
    int n = 3;
    std::string spec = "universal";
    std::size_t budget = 5'000'000;
    unsigned threads = 1;
};

// upper limits accepted for the sweep flags
struct CommandLimits {
    static constexpr int imax = 30;
    static constexpr int jmax = 30;
    static constexpr int nmax = 40;
    static constexpr int dims_dmax = 40;
    static constexpr int series_dmax = 100000;
    static constexpr int degree = 40;
    static constexpr int n = 80;
    static constexpr unsigned threads = 256;
};

/// target is one of p, q, chi, rek, words, gamma.
Report cmd_verify(const std::string& target, const CommandOptions& options);
Report cmd_normalize(const std::string& expression, const CommandOptions& options);
Report cmd_dims(const CommandOptions& options);
Report cmd_chi(const CommandOptions& options);
Report cmd_series(const CommandOptions& options);
Report cmd_basis(const CommandOptions& options);
Report cmd_words(const std::vector<std::string>& words, const CommandOptions& options);

}  // namespace lambda0
