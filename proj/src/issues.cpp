#include "skoslint/issues.hpp"

#include <array>

namespace skoslint {

namespace {

constexpr std::array<IssueInfo, kIssueCount> kCatalog = {{
    {IssueId::omitted_invalid_language_tags, "omitted_invalid_language_tags",
     "Omitted or Invalid Language Tags",
     "resources with label or documentation literals lacking a valid language tag",
     EntryKind::resource, false},
    {IssueId::incomplete_language_coverage, "incomplete_language_coverage",
     "Incomplete Language Coverage",
     "concepts whose language tag set misses tags used elsewhere in the vocabulary",
     EntryKind::resource, false},
    {IssueId::undocumented_concepts, "undocumented_concepts", "Undocumented Concepts",
     "concepts without any documentation property", EntryKind::resource, false},
    {IssueId::label_conflicts, "label_conflicts", "Label Conflicts",
     "authoritative concept pairs sharing a similar label in the same language",
     EntryKind::unordered_pair, false},
    {IssueId::orphan_concepts, "orphan_concepts", "Orphan Concepts",
     "concepts with no semantic relation to any other concept", EntryKind::resource, false},
    {IssueId::weakly_connected_components, "weakly_connected_components",
     "Weakly Connected Components",
     "clusters of concepts disconnected from the rest of the vocabulary", EntryKind::group,
     false},
    {IssueId::cyclic_hierarchical_relations, "cyclic_hierarchical_relations",
     "Cyclic Hierarchical Relations", "concepts forming cycles in the broader hierarchy",
     EntryKind::group, false},
    {IssueId::valueless_associative_relations, "valueless_associative_relations",
     "Valueless Associative Relations",
     "related concept pairs that already share a broader or narrower concept",
     EntryKind::unordered_pair, false},
    {IssueId::solely_transitively_related_concepts, "solely_transitively_related_concepts",
     "Solely Transitively Related Concepts",
     "concept pairs asserted with transitive hierarchy properties but no broader/narrower chain",
     EntryKind::ordered_pair, false},
    {IssueId::omitted_top_concepts, "omitted_top_concepts", "Omitted Top Concepts",
     "concept schemes without top concepts", EntryKind::resource, false},
    {IssueId::top_concept_having_broader, "top_concept_having_broader",
     "Top Concept Having Broader Concepts", "top concepts with broader concepts",
     EntryKind::resource, false},
    {IssueId::missing_inlinks, "missing_inlinks", "Missing In-Links",
     "authoritative concepts not referenced by other datasets (SPARQL endpoint)",
     EntryKind::resource, true},
    {IssueId::missing_outlinks, "missing_outlinks", "Missing Out-Links",
     "authoritative concepts not linked to any external resource", EntryKind::resource, false},
    {IssueId::broken_links, "broken_links", "Broken Links",
     "HTTP(S) resources that do not dereference to status 200", EntryKind::resource, true},
    {IssueId::undefined_skos_resources, "undefined_skos_resources", "Undefined SKOS Resources",
     "deprecated or invented resources in the SKOS namespace", EntryKind::resource, false},
}};

}  // namespace

std::span<const IssueInfo, kIssueCount> issue_catalog() { return kCatalog; }

const IssueInfo& issue_info(IssueId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::optional<IssueId> issue_from_key(std::string_view key) {
    for (const IssueInfo& info : kCatalog) {
        if (info.key == key) return info.id;
    }
    return std::nullopt;
}

}  // namespace skoslint
