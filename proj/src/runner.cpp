#include "skoslint/runner.hpp"

#include <algorithm>

#include "skoslint/errors.hpp"

namespace skoslint {

namespace {

using report::IssueResult;

IssueResult language_tags_result(const skos::Vocabulary& v, const CheckOptions& opts) {
    auto findings = checks::check_language_tags(v, opts.tag_validation);
    std::vector<std::string> resources;
    for (const auto& f : findings) resources.push_back(f.resource_id());
    std::sort(resources.begin(), resources.end());
    resources.erase(std::unique(resources.begin(), resources.end()), resources.end());
    return IssueResult::of_resources(IssueId::omitted_invalid_language_tags, std::move(resources));
}

IssueResult coverage_result(const skos::Vocabulary& v) {
    auto coverage = checks::check_language_coverage(v);
    std::vector<std::string> concepts;
    concepts.reserve(coverage.size());
    for (const auto& [concept_id, missing] : coverage) concepts.push_back(concept_id);
    return IssueResult::of_resources(IssueId::incomplete_language_coverage, std::move(concepts));
}

IssueResult label_conflicts_result(const skos::Vocabulary& v, const CheckOptions& opts) {
    auto sim = opts.case_sensitive ? checks::LabelSimilarity::case_sensitive_equality()
                                   : checks::LabelSimilarity::case_insensitive_equality();
    auto conflicts = checks::check_label_conflicts(v, opts.threshold, sim, opts.label_scope);
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(conflicts.size());
    for (const auto& c : conflicts) pairs.emplace_back(c.concept_a, c.concept_b);
    return IssueResult::of_pairs(IssueId::label_conflicts, pairs);
}

IssueResult cycles_result(const skos::Vocabulary& v) {
    auto cycles = checks::find_hierarchy_cycles(v);
    std::vector<std::vector<std::string>> groups;
    groups.reserve(cycles.size());
    for (auto& c : cycles) groups.push_back(std::move(c.concepts));
    return IssueResult::of_groups(IssueId::cyclic_hierarchical_relations, std::move(groups));
}

IssueResult inlinks_result(const skos::Vocabulary& v, const RunOptions& options) {
    if (options.offline)
        return IssueResult::skipped(IssueId::missing_inlinks, "offline mode");
    if (!options.network.sparql_endpoint)
        return IssueResult::skipped(IssueId::missing_inlinks, "no SPARQL endpoint configured");
    try {
        auto report = checks::find_missing_inlinks(v, options.network);
        IssueResult r = IssueResult::of_resources(IssueId::missing_inlinks, report.affected);
        r.extrapolated = report.extrapolated;
        if (r.extrapolated) r.count = report.extrapolated_total;
        return r;
    } catch (const EndpointUnreachableError& e) {
        return IssueResult::skipped(IssueId::missing_inlinks, e.what());
    }
}

IssueResult broken_links_result(const skos::Vocabulary& v, const RunOptions& options) {
    if (options.offline) return IssueResult::skipped(IssueId::broken_links, "offline mode");
    auto report = checks::probe_links(v, options.network);
    IssueResult r = IssueResult::of_resources(IssueId::broken_links, report.broken);
    r.extrapolated = report.extrapolated;
    if (r.extrapolated) r.count = report.extrapolated_total;
    return r;
}

IssueResult run_one(IssueId id, const skos::Vocabulary& v, const RunOptions& options) {
    switch (id) {
        case IssueId::omitted_invalid_language_tags:
            return language_tags_result(v, options.check);
        case IssueId::incomplete_language_coverage: return coverage_result(v);
        case IssueId::undocumented_concepts:
            return IssueResult::of_resources(IssueId::undocumented_concepts,
                                             checks::check_undocumented_concepts(v));
        case IssueId::label_conflicts: return label_conflicts_result(v, options.check);
        case IssueId::orphan_concepts:
            return IssueResult::of_resources(IssueId::orphan_concepts,
                                             checks::find_orphan_concepts(v));
        case IssueId::weakly_connected_components:
            return IssueResult::of_groups(IssueId::weakly_connected_components,
                                          checks::find_components(v).components);
        case IssueId::cyclic_hierarchical_relations: return cycles_result(v);
        case IssueId::valueless_associative_relations:
            return IssueResult::of_pairs(IssueId::valueless_associative_relations,
                                         checks::find_valueless_associative_relations(v));
        case IssueId::solely_transitively_related_concepts:
            return IssueResult::of_pairs(IssueId::solely_transitively_related_concepts,
                                         checks::find_solely_transitive_pairs(v));
        case IssueId::omitted_top_concepts:
            return IssueResult::of_resources(IssueId::omitted_top_concepts,
                                             checks::find_schemes_without_top_concepts(v));
        case IssueId::top_concept_having_broader:
            return IssueResult::of_resources(IssueId::top_concept_having_broader,
                                             checks::find_top_concepts_with_broader(v));
        case IssueId::missing_inlinks: return inlinks_result(v, options);
        case IssueId::missing_outlinks:
            return IssueResult::of_resources(IssueId::missing_outlinks,
                                             checks::find_missing_outlinks(v));
        case IssueId::broken_links: return broken_links_result(v, options);
        case IssueId::undefined_skos_resources:
            return IssueResult::of_resources(IssueId::undefined_skos_resources,
                                             checks::find_undefined_skos_resources(v));
    }
    throw std::logic_error("unhandled issue id");
}

}  // namespace

std::vector<report::IssueResult> run_checks(const skos::Vocabulary& v,
                                            const RunOptions& options) {
    std::vector<IssueId> selected = options.issues;
    if (selected.empty()) {
        for (const IssueInfo& info : issue_catalog()) selected.push_back(info.id);
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    std::vector<report::IssueResult> results;
    results.reserve(selected.size());
    for (IssueId id : selected) results.push_back(run_one(id, v, options));
    return results;
}

}  // namespace skoslint
