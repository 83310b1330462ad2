#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skoslint/issues.hpp"
#include "skoslint/vocabulary.hpp"

namespace skoslint::report {

// One check's outcome. Affected entries are one-element for resources,
// two-element for pairs, and member lists for groups; the whole list is
// sorted. For extrapolated results `count` carries the extrapolated
// total, otherwise count == |affected|.
struct IssueResult {
    IssueId id{};
    std::vector<std::vector<std::string>> affected;
    std::size_t count = 0;
    bool extrapolated = false;
    std::optional<std::string> skipped_reason;

    bool operator==(const IssueResult&) const = default;

    static IssueResult of_resources(IssueId id, std::vector<std::string> resources);
    static IssueResult of_pairs(IssueId id,
                                const std::vector<std::pair<std::string, std::string>>& pairs);
    static IssueResult of_groups(IssueId id, std::vector<std::vector<std::string>> groups);
    static IssueResult skipped(IssueId id, std::string reason);
};

// Whether a result counts as a finding for the exit-code contract. A
// single weakly connected component is the ideal structure, so that
// issue only counts from two components up.
bool issue_found(const IssueResult& r);

struct RunConfigSummary {
    bool offline = false;
    double threshold = 1.0;
    double subsample_rate = 1.0;
    std::uint64_t random_seed = 42;
    std::size_t timeout_ms = 30000;
    std::size_t max_redirects = 10;
    std::size_t max_parallel_requests = 8;
    std::optional<std::string> sparql_endpoint;

    bool operator==(const RunConfigSummary&) const = default;
};

struct ReportDocument {
    skos::VocabStats stats;
    std::vector<IssueResult> issues;  // canonical order
    std::string tool_version;
    std::string namespace_prefix;
    RunConfigSummary run_config;
    std::optional<std::string> timestamp;  // absent in deterministic mode

    bool operator==(const ReportDocument&) const = default;
};

struct ReportMetadata {
    std::string tool_version;
    std::string namespace_prefix;
    RunConfigSummary run_config;
    std::optional<std::string> timestamp;
};

// Orders results canonically; throws DuplicateIssueError on duplicate ids.
ReportDocument assemble(const skos::VocabStats& stats, std::vector<IssueResult> results,
                        ReportMetadata metadata);

// Stable key order; equal documents render to identical bytes.
std::string render_json(const ReportDocument& doc);
ReportDocument parse_report_json(const std::string& text);

enum class Verbosity { summary, full };

// Summary: one line per issue, extrapolated counts marked with '*'.
// Full additionally lists affected resources.
std::string render_text(const ReportDocument& doc, Verbosity verbosity = Verbosity::summary);

// 1234567 -> "1,234,567"
std::string format_count(std::size_t n);

// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace skoslint::report
