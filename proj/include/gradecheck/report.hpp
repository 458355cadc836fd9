#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace gradecheck {

struct Counterexample {
    std::string inputs;
    std::string expected;
    std::string got;
};

// Outcome of a verification sweep. A failed report always carries the first
// counterexample found.
struct Report {
    bool passed = true;
    std::size_t checks_run = 0;
    std::optional<Counterexample> counterexample;
    double elapsed_ms = 0.0;

    static Report pass(std::size_t checks, double ms) { return {true, checks, std::nullopt, ms}; }
    static Report fail(std::size_t checks, Counterexample ce, double ms) {
        return {false, checks, std::move(ce), ms};
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace gradecheck
