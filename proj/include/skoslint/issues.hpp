#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace skoslint {

// The fifteen checks in canonical report order.
enum class IssueId {
    omitted_invalid_language_tags,
    incomplete_language_coverage,
    undocumented_concepts,
    label_conflicts,
    orphan_concepts,
    weakly_connected_components,
    cyclic_hierarchical_relations,
    valueless_associative_relations,
    solely_transitively_related_concepts,
    omitted_top_concepts,
    top_concept_having_broader,
    missing_inlinks,
    missing_outlinks,
    broken_links,
    undefined_skos_resources,
};

inline constexpr std::size_t kIssueCount = 15;

// How an affected entry reads: a single resource, a pair, or a group
// of concepts (components, cycles).
enum class EntryKind { resource, unordered_pair, ordered_pair, group };

struct IssueInfo {
    IssueId id;
    std::string_view key;    // stable snake_case id
    std::string_view label;  // display name
    std::string_view description;
    EntryKind entry_kind;
    bool needs_network;
};

std::span<const IssueInfo, kIssueCount> issue_catalog();
const IssueInfo& issue_info(IssueId id);
std::optional<IssueId> issue_from_key(std::string_view key);

}  // namespace skoslint
