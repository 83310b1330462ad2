#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "skoslint/rdf.hpp"
#include "skoslint/skos.hpp"

namespace skoslint::skos {

// Least fixpoint of the graph under the fixed SKOS rule set:
// subproperty closure, inverse pairs, symmetric and transitive
// properties, and type inference from the SKOS domain/range axioms.
// The result shares the input's term pool.
rdf::Graph entail(const rdf::Graph& asserted);
rdf::Graph entail(const rdf::Graph& asserted, const Terms& terms);

// Longest common prefix ending at a '/' or '#' shared by the majority
// of concept IRIs; ties go to the longer prefix. Throws NoConceptsError
// when the graph has no IRI-identified concepts.
std::string infer_namespace(const rdf::Graph& graph);

struct VocabStats {
    std::size_t concepts = 0;
    std::size_t authoritative_concepts = 0;
    std::size_t concept_labels = 0;
    std::size_t semantic_relations = 0;
    std::size_t concept_schemes = 0;

    bool operator==(const VocabStats&) const = default;
};

// The vocabulary model every check runs against: the asserted graph,
// its entailment closure, and the derived resource sets. Immutable
// after build; checks may read it concurrently.
class Vocabulary {
public:
    static Vocabulary build(rdf::Graph asserted, std::optional<std::string> namespace_prefix = {});

    const rdf::Graph& asserted() const { return asserted_; }
    const rdf::Graph& entailed() const { return entailed_; }
    const Terms& terms() const { return *terms_; }
    const rdf::TermPool& pool() const { return asserted_.pool(); }
    const std::string& namespace_prefix() const { return namespace_prefix_; }

    // Sorted by term order.
    const std::vector<rdf::TermId>& concepts() const { return concepts_; }
    const std::vector<rdf::TermId>& authoritative_concepts() const { return authoritative_; }
    const std::vector<rdf::TermId>& concept_schemes() const { return schemes_; }
    const std::vector<rdf::TermId>& resources() const { return resources_; }
    const std::vector<rdf::TermId>& plain_literals() const { return plain_literals_; }

    // Entailed triples whose predicate entails skos:semanticRelation,
    // restricted to concept endpoints.
    const std::vector<rdf::IdTriple>& semantic_relations() const { return semantic_relations_; }

    bool is_concept(rdf::TermId id) const { return concept_set_.count(id) != 0; }
    bool is_authoritative(rdf::TermId id) const { return authoritative_set_.count(id) != 0; }
    bool in_namespace(const rdf::Term& t) const;

    std::string iri_of(rdf::TermId id) const;

    VocabStats stats() const;

private:
    rdf::Graph asserted_;
    rdf::Graph entailed_;
    std::shared_ptr<Terms> terms_;
    std::string namespace_prefix_;
    std::vector<rdf::TermId> concepts_;
    std::vector<rdf::TermId> authoritative_;
    std::vector<rdf::TermId> schemes_;
    std::vector<rdf::TermId> resources_;
    std::vector<rdf::TermId> plain_literals_;
    std::vector<rdf::IdTriple> semantic_relations_;
    std::unordered_set<rdf::TermId> concept_set_;
    std::unordered_set<rdf::TermId> authoritative_set_;
};

VocabStats compute_stats(const Vocabulary& v);

}  // namespace skoslint::skos
