#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace symderiv {

enum class CheckStatus { Pass, Fail, Reported };

std::string to_string(CheckStatus s);

/// One line of a report. Pass and Fail require an expected value; checks
/// without one are Reported.
struct Check {
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::Reported;
    nlohmann::json computed;
    nlohmann::json expected;  ///< null for reported checks
    double ms = 0;
};

class Report {
public:
    Report(std::string command, nlohmann::json params);

    /// Pass iff computed == expected.
    Check& expect(std::string name, std::string anchor, nlohmann::json computed, nlohmann::json expected, double ms);
    /// Pass iff ok; expected describes the claim being tested.
    Check& expect_that(std::string name, std::string anchor, nlohmann::json computed, nlohmann::json expected, bool ok,
                       double ms);
    Check& reported(std::string name, std::string anchor, nlohmann::json computed, double ms);

    const std::vector<Check>& checks() const noexcept { return checks_; }
    const std::string& command() const noexcept { return command_; }
    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }

    void set_cache_counts(std::size_t hits, std::size_t misses)
    {
        cache_hits_ = hits;
        cache_misses_ = misses;
    }
    /// Appends every check of another report (names are kept).
    void merge(const Report& other);

    /// Field order is fixed. With with_timing = false every "ms" is 0, so
    /// equal inputs give byte-identical output.
    nlohmann::ordered_json to_json(bool with_timing = true) const;
    std::string dump(bool with_timing = true) const { return to_json(with_timing).dump(2); }

private:
    std::string command_;
    nlohmann::json params_;
    std::vector<Check> checks_;
    std::size_t cache_hits_ = 0;
    std::size_t cache_misses_ = 0;
};

/// Milliseconds since construction.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    void reset() { start_ = std::chrono::steady_clock::now(); }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Version string compiled into the library.
const char* version();

} // namespace symderiv
