#pragma once

#include <random>
#include <string>
#include <vector>

#include "g2v/rational.hpp"
#include "g2v/verma.hpp"

namespace g2v {

struct CliResult {
    int status = 0;
    std::string output;
};

// Runs one command-line invocation (args exclude the program name) and
// captures the full textual output.  Status: 0 success, 1 domain error
// (weight outside a type condition, regime violation, depth exhaustion),
// 2 malformed input, 3 verification failure.
CliResult run(const std::vector<std::string>& args);

// Deterministic samplers for the verification suites: numerator uniform
// in [-numerator_bound, numerator_bound], denominator from the given list.
Rational sample_rational(std::mt19937_64& rng, const std::vector<long>& denominators,
                         long numerator_bound);
Weight sample_weight(std::mt19937_64& rng, const std::vector<long>& denominators,
                     long numerator_bound);

struct SuiteResult {
    bool ok = true;
    std::string report;
};

// Named verification suite: jacobi | parity | closed-forms | oracle |
// diagrams.  seed drives the weight sampling; bound <= 0 keeps each
// suite's default size.  Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, unsigned long long seed, int bound);

}  // namespace g2v
