#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skoslint/vocabulary.hpp"

namespace skoslint::checks {

// Concepts with no semantic relation to any distinct concept. A concept
// related only to itself is still an orphan.
std::vector<std::string> find_orphan_concepts(const skos::Vocabulary& v);

struct ComponentReport {
    // Weakly connected components over non-orphan concepts with semantic
    // relations as undirected edges; sorted by size descending, members
    // sorted lexicographically.
    std::vector<std::vector<std::string>> components;
};

ComponentReport find_components(const skos::Vocabulary& v);

struct HierarchyCycle {
    std::vector<std::string> concepts;  // sorted members of one cycle cluster
};

// One cycle per strongly connected component of size >= 2 of the entailed
// broader graph, plus one length-1 cycle per reflexive broader edge. The
// union of reported members is exactly the set of concepts on some cycle.
std::vector<HierarchyCycle> find_hierarchy_cycles(const skos::Vocabulary& v);

// Unordered pairs {a,b} related by skos:related that also share a direct
// broader or narrower concept.
std::vector<std::pair<std::string, std::string>> find_valueless_associative_relations(
    const skos::Vocabulary& v);

// Ordered pairs (a,b) with an asserted broaderTransitive or (inverted)
// narrowerTransitive triple but no asserted broader/narrower chain from
// a to b.
std::vector<std::pair<std::string, std::string>> find_solely_transitive_pairs(
    const skos::Vocabulary& v);

// Concept schemes with no hasTopConcept/topConceptOf link.
std::vector<std::string> find_schemes_without_top_concepts(const skos::Vocabulary& v);

// Top concepts that are subjects of an entailed skos:broader triple;
// skos:broadMatch links do not count.
std::vector<std::string> find_top_concepts_with_broader(const skos::Vocabulary& v);

}  // namespace skoslint::checks
