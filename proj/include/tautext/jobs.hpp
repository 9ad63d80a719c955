#pragma once

#include "tautext/curve.hpp"
#include "tautext/spectral.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tautext::jobs {

enum ExitCode { ok = 0, validation_failure = 1, undetermined = 2, selftest_failure = 3 };

/// Malformed document (with line) or a list of violated invariants.
class JobError : public std::runtime_error {
public:
    JobError(std::string what, std::vector<std::string> problems = {})
        : std::runtime_error(std::move(what)), problems_(std::move(problems))
    {
    }
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct BundleGrid {
    std::string name = "E";
    std::vector<std::int64_t> ranks{1};
    std::vector<std::int64_t> degrees{0};
    std::vector<std::int64_t> h0s;  // empty: no override
    bool stable = true;
    bool trivial = false;
    std::optional<std::int64_t> canonical_power;
};

struct JobSpec {
    std::string command;
    std::vector<std::int64_t> genera;
    bool hyperelliptic = false;
    BundleGrid bundle;
    std::optional<BundleGrid> bundle_f;
    std::vector<std::int64_t> ns{1};
    Overrides overrides;
    bool strict = false;
    std::string format = "csv";
    std::string output;  // empty: standard output
    unsigned jobs = 1;
};

JobSpec parse_job(const std::string& text);

struct Row {
    std::vector<std::string> cells;  // aligned with JobResult::columns
    std::vector<HypothesisNote> trail;
    bool determined = true;
};

struct JobResult {
    std::string command;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    bool selftest_failed = false;
};

JobResult run_job(const JobSpec& job);
std::string render(const JobResult& result, const std::string& format);
int exit_code(const JobSpec& job, const JobResult& result);

}  // namespace tautext::jobs
