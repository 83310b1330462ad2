#include "skoslint/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include "json.hpp"
#include "skoslint/errors.hpp"
#include "skoslint/version.hpp"

namespace skoslint::report {

using ordered_json = nlohmann::ordered_json;

IssueResult IssueResult::of_resources(IssueId id, std::vector<std::string> resources) {
    IssueResult r;
    r.id = id;
    std::sort(resources.begin(), resources.end());
    for (std::string& s : resources) r.affected.push_back({std::move(s)});
    r.count = r.affected.size();
    return r;
}

IssueResult IssueResult::of_pairs(IssueId id,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
    IssueResult r;
    r.id = id;
    for (const auto& [a, b] : pairs) r.affected.push_back({a, b});
    std::sort(r.affected.begin(), r.affected.end());
    r.count = r.affected.size();
    return r;
}

IssueResult IssueResult::of_groups(IssueId id, std::vector<std::vector<std::string>> groups) {
    IssueResult r;
    r.id = id;
    r.affected = std::move(groups);
    r.count = r.affected.size();
    return r;
}

IssueResult IssueResult::skipped(IssueId id, std::string reason) {
    IssueResult r;
    r.id = id;
    r.skipped_reason = std::move(reason);
    return r;
}

bool issue_found(const IssueResult& r) {
    if (r.skipped_reason) return false;
    if (r.id == IssueId::weakly_connected_components) return r.count >= 2;
    return r.count > 0;
}

ReportDocument assemble(const skos::VocabStats& stats, std::vector<IssueResult> results,
                        ReportMetadata metadata) {
    std::sort(results.begin(), results.end(), [](const IssueResult& a, const IssueResult& b) {
        return static_cast<int>(a.id) < static_cast<int>(b.id);
    });
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].id == results[i - 1].id)
            throw DuplicateIssueError(std::string(issue_info(results[i].id).key));
    }
    ReportDocument doc;
    doc.stats = stats;
    doc.issues = std::move(results);
    doc.tool_version = std::move(metadata.tool_version);
    doc.namespace_prefix = std::move(metadata.namespace_prefix);
    doc.run_config = std::move(metadata.run_config);
    doc.timestamp = std::move(metadata.timestamp);
    return doc;
}

namespace {

ordered_json affected_to_json(const std::vector<std::vector<std::string>>& affected) {
    ordered_json arr = ordered_json::array();
    for (const auto& entry : affected) {
        if (entry.size() == 1) {
            arr.push_back(entry.front());
        } else {
            arr.push_back(entry);
        }
    }
    return arr;
}

}  // namespace

std::string render_json(const ReportDocument& doc) {
    ordered_json j;
    j["tool"] = std::string(kToolName);
    j["version"] = doc.tool_version;
    j["namespace"] = doc.namespace_prefix;
    if (doc.timestamp) j["timestamp"] = *doc.timestamp;
    j["statistics"] = {
        {"concepts", doc.stats.concepts},
        {"authoritative_concepts", doc.stats.authoritative_concepts},
        {"concept_labels", doc.stats.concept_labels},
        {"semantic_relations", doc.stats.semantic_relations},
        {"concept_schemes", doc.stats.concept_schemes},
    };
    ordered_json cfg;
    cfg["offline"] = doc.run_config.offline;
    cfg["threshold"] = doc.run_config.threshold;
    cfg["subsample_rate"] = doc.run_config.subsample_rate;
    cfg["random_seed"] = doc.run_config.random_seed;
    cfg["timeout_ms"] = doc.run_config.timeout_ms;
    cfg["max_redirects"] = doc.run_config.max_redirects;
    cfg["max_parallel_requests"] = doc.run_config.max_parallel_requests;
    cfg["sparql_endpoint"] =
        doc.run_config.sparql_endpoint ? ordered_json(*doc.run_config.sparql_endpoint)
                                       : ordered_json(nullptr);
    j["run_config"] = std::move(cfg);

    ordered_json issues = ordered_json::array();
    for (const IssueResult& r : doc.issues) {
        const IssueInfo& info = issue_info(r.id);
        ordered_json issue;
        issue["id"] = std::string(info.key);
        issue["label"] = std::string(info.label);
        issue["count"] = r.count;
        issue["extrapolated"] = r.extrapolated;
        if (r.skipped_reason) issue["skipped_reason"] = *r.skipped_reason;
        issue["affected"] = affected_to_json(r.affected);
        issues.push_back(std::move(issue));
    }
    j["issues"] = std::move(issues);
    return j.dump(2) + "\n";
}

ReportDocument parse_report_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ReportDocument doc;
    doc.tool_version = j.at("version").get<std::string>();
    doc.namespace_prefix = j.at("namespace").get<std::string>();
    if (j.contains("timestamp")) doc.timestamp = j["timestamp"].get<std::string>();

    const auto& stats = j.at("statistics");
    doc.stats.concepts = stats.at("concepts").get<std::size_t>();
    doc.stats.authoritative_concepts = stats.at("authoritative_concepts").get<std::size_t>();
    doc.stats.concept_labels = stats.at("concept_labels").get<std::size_t>();
    doc.stats.semantic_relations = stats.at("semantic_relations").get<std::size_t>();
    doc.stats.concept_schemes = stats.at("concept_schemes").get<std::size_t>();

    const auto& cfg = j.at("run_config");
    doc.run_config.offline = cfg.at("offline").get<bool>();
    doc.run_config.threshold = cfg.at("threshold").get<double>();
    doc.run_config.subsample_rate = cfg.at("subsample_rate").get<double>();
    doc.run_config.random_seed = cfg.at("random_seed").get<std::uint64_t>();
    doc.run_config.timeout_ms = cfg.at("timeout_ms").get<std::size_t>();
    doc.run_config.max_redirects = cfg.at("max_redirects").get<std::size_t>();
    doc.run_config.max_parallel_requests = cfg.at("max_parallel_requests").get<std::size_t>();
    if (!cfg.at("sparql_endpoint").is_null())
        doc.run_config.sparql_endpoint = cfg["sparql_endpoint"].get<std::string>();

    for (const auto& issue : j.at("issues")) {
        IssueResult r;
        auto id = issue_from_key(issue.at("id").get<std::string>());
        if (!id) throw std::runtime_error("unknown issue id in report");
        r.id = *id;
        r.count = issue.at("count").get<std::size_t>();
        r.extrapolated = issue.at("extrapolated").get<bool>();
        if (issue.contains("skipped_reason"))
            r.skipped_reason = issue["skipped_reason"].get<std::string>();
        for (const auto& entry : issue.at("affected")) {
            if (entry.is_string()) {
                r.affected.push_back({entry.get<std::string>()});
            } else {
                r.affected.push_back(entry.get<std::vector<std::string>>());
            }
        }
        doc.issues.push_back(std::move(r));
    }
    return doc;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_count(std::size_t n) {
    std::string digits = std::to_string(n);
    std::string out;
    out.reserve(digits.size() + digits.size() / 3);
    std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i == lead || (i > lead && (i - lead) % 3 == 0)) out += ',';
        out += digits[i];
    }
    return out;
}

namespace {

std::string entry_text(const IssueInfo& info, const std::vector<std::string>& entry) {
    if (entry.size() == 1) return entry.front();
    if (entry.size() == 2 && info.entry_kind == EntryKind::unordered_pair)
        return entry[0] + " <-> " + entry[1];
    if (entry.size() == 2 && info.entry_kind == EntryKind::ordered_pair)
        return entry[0] + " -> " + entry[1];
    std::string out;
    for (std::size_t i = 0; i < entry.size(); ++i) {
        if (i) out += ", ";
        out += entry[i];
    }
    return out;
}

}  // namespace

std::string render_text(const ReportDocument& doc, Verbosity verbosity) {
    std::ostringstream out;
    out << kToolName << ' ' << doc.tool_version << " report\n";
    out << "namespace: " << doc.namespace_prefix << '\n';
    if (doc.timestamp) out << "timestamp: " << *doc.timestamp << '\n';
    out << "statistics:\n";
    out << "  concepts: " << format_count(doc.stats.concepts) << '\n';
    out << "  authoritative concepts: " << format_count(doc.stats.authoritative_concepts) << '\n';
    out << "  concept labels: " << format_count(doc.stats.concept_labels) << '\n';
    out << "  semantic relations: " << format_count(doc.stats.semantic_relations) << '\n';
    out << "  concept schemes: " << format_count(doc.stats.concept_schemes) << '\n';
    if (doc.issues.empty()) return out.str();

    out << "issues:\n";
    for (const IssueResult& r : doc.issues) {
        const IssueInfo& info = issue_info(r.id);
        out << "  " << info.label << ": ";
        if (r.skipped_reason) {
            out << "skipped (" << *r.skipped_reason << ")\n";
            continue;
        }
        out << format_count(r.count);
        if (r.extrapolated) out << '*';
        out << '\n';
        if (verbosity == Verbosity::full) {
            for (const auto& entry : r.affected) out << "    " << entry_text(info, entry) << '\n';
        }
    }
    return out.str();
}

}  // namespace skoslint::report
