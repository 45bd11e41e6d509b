#include "symderiv/report.hpp"

#include <cmath>

#ifndef SYMDERIV_VERSION
#define SYMDERIV_VERSION "0.0.0"
#endif

namespace symderiv {

const char* version() { return SYMDERIV_VERSION; }

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Reported: return "reported";
    }
    return "reported";
}

Report::Report(std::string command, nlohmann::json params) : command_(std::move(command)), params_(std::move(params)) {}

Check& Report::expect(std::string name, std::string anchor, nlohmann::json computed, nlohmann::json expected, double ms)
{
    const bool ok = computed == expected;
    return expect_that(std::move(name), std::move(anchor), std::move(computed), std::move(expected), ok, ms);
}

Check& Report::expect_that(std::string name, std::string anchor, nlohmann::json computed, nlohmann::json expected,
                           bool ok, double ms)
{
    if (expected.is_null()) throw std::invalid_argument("a pass/fail check needs an expected value: " + name);
    checks_.push_back({std::move(name), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail,
                       std::move(computed), std::move(expected), ms});
    return checks_.back();
}

Check& Report::reported(std::string name, std::string anchor, nlohmann::json computed, double ms)
{
    checks_.push_back({std::move(name), std::move(anchor), CheckStatus::Reported, std::move(computed), nullptr, ms});
    return checks_.back();
}

std::size_t Report::failures() const
{
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.status == CheckStatus::Fail;
    return n;
}

void Report::merge(const Report& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

nlohmann::ordered_json Report::to_json(bool with_timing) const
{
    nlohmann::ordered_json out;
    out["command"] = command_;
    out["params"] = params_;
    auto& arr = out["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["anchor"] = c.anchor;
        j["status"] = to_string(c.status);
        j["computed"] = c.computed;
        j["expected"] = c.expected;
        j["ms"] = with_timing ? std::round(c.ms * 1000.0) / 1000.0 : 0.0;
        arr.push_back(std::move(j));
    }
    out["version"] = version();
    out["cache"] = {{"hits", cache_hits_}, {"misses", cache_misses_}};
    return out;
}

} // namespace symderiv
