#pragma once

#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "skoslint/rdf.hpp"

namespace skoslint::skos {

inline constexpr std::string_view kSkosNs = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kSkosXlNs = "http://www.w3.org/2008/05/skos-xl#";
inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDcTermsNs = "http://purl.org/dc/terms/";
inline constexpr std::string_view kDcElementsNs = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kFoafNs = "http://xmlns.com/foaf/0.1/";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";

namespace iri {
inline constexpr std::string_view Concept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr std::string_view ConceptScheme =
    "http://www.w3.org/2004/02/skos/core#ConceptScheme";
inline constexpr std::string_view prefLabel = "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view altLabel = "http://www.w3.org/2004/02/skos/core#altLabel";
inline constexpr std::string_view hiddenLabel = "http://www.w3.org/2004/02/skos/core#hiddenLabel";
inline constexpr std::string_view note = "http://www.w3.org/2004/02/skos/core#note";
inline constexpr std::string_view changeNote = "http://www.w3.org/2004/02/skos/core#changeNote";
inline constexpr std::string_view definition = "http://www.w3.org/2004/02/skos/core#definition";
inline constexpr std::string_view editorialNote =
    "http://www.w3.org/2004/02/skos/core#editorialNote";
inline constexpr std::string_view example = "http://www.w3.org/2004/02/skos/core#example";
inline constexpr std::string_view historyNote = "http://www.w3.org/2004/02/skos/core#historyNote";
inline constexpr std::string_view scopeNote = "http://www.w3.org/2004/02/skos/core#scopeNote";
inline constexpr std::string_view semanticRelation =
    "http://www.w3.org/2004/02/skos/core#semanticRelation";
inline constexpr std::string_view broader = "http://www.w3.org/2004/02/skos/core#broader";
inline constexpr std::string_view narrower = "http://www.w3.org/2004/02/skos/core#narrower";
inline constexpr std::string_view related = "http://www.w3.org/2004/02/skos/core#related";
inline constexpr std::string_view broaderTransitive =
    "http://www.w3.org/2004/02/skos/core#broaderTransitive";
inline constexpr std::string_view narrowerTransitive =
    "http://www.w3.org/2004/02/skos/core#narrowerTransitive";
inline constexpr std::string_view mappingRelation =
    "http://www.w3.org/2004/02/skos/core#mappingRelation";
inline constexpr std::string_view broadMatch = "http://www.w3.org/2004/02/skos/core#broadMatch";
inline constexpr std::string_view narrowMatch = "http://www.w3.org/2004/02/skos/core#narrowMatch";
inline constexpr std::string_view relatedMatch =
    "http://www.w3.org/2004/02/skos/core#relatedMatch";
inline constexpr std::string_view closeMatch = "http://www.w3.org/2004/02/skos/core#closeMatch";
inline constexpr std::string_view exactMatch = "http://www.w3.org/2004/02/skos/core#exactMatch";
inline constexpr std::string_view inScheme = "http://www.w3.org/2004/02/skos/core#inScheme";
inline constexpr std::string_view hasTopConcept =
    "http://www.w3.org/2004/02/skos/core#hasTopConcept";
inline constexpr std::string_view topConceptOf =
    "http://www.w3.org/2004/02/skos/core#topConceptOf";
}  // namespace iri

// Labeling properties checked for language tag problems.
std::span<const std::string_view> labeling_properties();

// skos:note and its six subproperties.
std::span<const std::string_view> documentation_properties();

// Namespaces whose resources never count as data out-links.
std::span<const std::string_view> schema_namespaces();

// Interned ids for the fixed SKOS rule set, bound to one term pool.
struct Terms {
    explicit Terms(rdf::TermPool& pool);

    rdf::TermId rdf_type;
    rdf::TermId rdfs_label;
    rdf::TermId concept_class;
    rdf::TermId concept_scheme_class;

    rdf::TermId pref_label, alt_label, hidden_label;
    rdf::TermId note, change_note, definition, editorial_note, example, history_note, scope_note;

    rdf::TermId semantic_relation;
    rdf::TermId broader, narrower, related;
    rdf::TermId broader_transitive, narrower_transitive;
    rdf::TermId mapping_relation;
    rdf::TermId broad_match, narrow_match, related_match, close_match, exact_match;
    rdf::TermId in_scheme, has_top_concept, top_concept_of;

    // Direct superproperties, inverses, symmetry and transitivity flags
    // of the fixed SKOS rule set, keyed by interned predicate id.
    std::unordered_map<rdf::TermId, std::vector<rdf::TermId>> superproperties;
    std::unordered_map<rdf::TermId, rdf::TermId> inverses;
    std::unordered_set<rdf::TermId> symmetric;
    std::unordered_set<rdf::TermId> transitive;

    // All properties entailing skos:semanticRelation (including itself).
    std::unordered_set<rdf::TermId> semantic_relation_family;
    std::unordered_set<rdf::TermId> label_props;  // labeling_properties()
    std::unordered_set<rdf::TermId> doc_props;    // documentation_properties()
};

}  // namespace skoslint::skos
