#include "skoslint/skos.hpp"

namespace skoslint::skos {

namespace {

constexpr std::string_view kLabelingProps[] = {
    kRdfsLabel,
    iri::prefLabel,
    iri::altLabel,
    iri::hiddenLabel,
};

constexpr std::string_view kDocumentationProps[] = {
    iri::note,        iri::changeNote, iri::definition, iri::editorialNote,
    iri::example,     iri::historyNote, iri::scopeNote,
};

constexpr std::string_view kSchemaNamespaces[] = {
    kRdfNs, kRdfsNs, kOwlNs, kSkosNs, kSkosXlNs, kDcTermsNs, kDcElementsNs, kXsdNs, kFoafNs,
};

}  // namespace

std::span<const std::string_view> labeling_properties() { return kLabelingProps; }
std::span<const std::string_view> documentation_properties() { return kDocumentationProps; }
std::span<const std::string_view> schema_namespaces() { return kSchemaNamespaces; }

Terms::Terms(rdf::TermPool& pool) {
    auto id = [&pool](std::string_view v) {
        return pool.intern(rdf::Term{rdf::Iri{std::string(v)}});
    };

    rdf_type = id(kRdfType);
    rdfs_label = id(kRdfsLabel);
    concept_class = id(iri::Concept);
    concept_scheme_class = id(iri::ConceptScheme);

    pref_label = id(iri::prefLabel);
    alt_label = id(iri::altLabel);
    hidden_label = id(iri::hiddenLabel);
    note = id(iri::note);
    change_note = id(iri::changeNote);
    definition = id(iri::definition);
    editorial_note = id(iri::editorialNote);
    example = id(iri::example);
    history_note = id(iri::historyNote);
    scope_note = id(iri::scopeNote);

    semantic_relation = id(iri::semanticRelation);
    broader = id(iri::broader);
    narrower = id(iri::narrower);
    related = id(iri::related);
    broader_transitive = id(iri::broaderTransitive);
    narrower_transitive = id(iri::narrowerTransitive);
    mapping_relation = id(iri::mappingRelation);
    broad_match = id(iri::broadMatch);
    narrow_match = id(iri::narrowMatch);
    related_match = id(iri::relatedMatch);
    close_match = id(iri::closeMatch);
    exact_match = id(iri::exactMatch);
    in_scheme = id(iri::inScheme);
    has_top_concept = id(iri::hasTopConcept);
    top_concept_of = id(iri::topConceptOf);

    superproperties = {
        {broader, {broader_transitive}},
        {narrower, {narrower_transitive}},
        {broader_transitive, {semantic_relation}},
        {narrower_transitive, {semantic_relation}},
        {related, {semantic_relation}},
        {broad_match, {mapping_relation}},
        {narrow_match, {mapping_relation}},
        {related_match, {mapping_relation}},
        {close_match, {mapping_relation}},
        {exact_match, {close_match}},
        {mapping_relation, {semantic_relation}},
        {pref_label, {rdfs_label}},
        {alt_label, {rdfs_label}},
        {hidden_label, {rdfs_label}},
        {change_note, {note}},
        {definition, {note}},
        {editorial_note, {note}},
        {example, {note}},
        {history_note, {note}},
        {scope_note, {note}},
    };

    inverses = {
        {broader, narrower},
        {narrower, broader},
        {broader_transitive, narrower_transitive},
        {narrower_transitive, broader_transitive},
        {broad_match, narrow_match},
        {narrow_match, broad_match},
        {has_top_concept, top_concept_of},
        {top_concept_of, has_top_concept},
    };

    symmetric = {related, related_match, exact_match, close_match};
    transitive = {broader_transitive, narrower_transitive, exact_match};

    semantic_relation_family = {
        semantic_relation, broader,       narrower,      related,
        broader_transitive, narrower_transitive, mapping_relation,
        broad_match,        narrow_match, related_match, close_match,
        exact_match,
    };

    label_props = {rdfs_label, pref_label, alt_label, hidden_label};
    doc_props = {note,    change_note,  definition, editorial_note,
                 example, history_note, scope_note};
}

}  // namespace skoslint::skos
