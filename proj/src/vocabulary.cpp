#include "skoslint/vocabulary.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "skoslint/errors.hpp"

namespace skoslint::skos {

using rdf::Graph;
using rdf::IdTriple;
using rdf::TermId;

namespace {

struct TypeRule {
    std::optional<TermId> subject_type;
    std::optional<TermId> object_type;
};

}  // namespace

rdf::Graph entail(const rdf::Graph& asserted, const Terms& terms) {
    Graph closure = asserted.clone();

    std::unordered_map<TermId, TypeRule> type_rules = {
        {terms.semantic_relation, {terms.concept_class, terms.concept_class}},
        {terms.top_concept_of, {terms.concept_class, terms.concept_scheme_class}},
        {terms.has_top_concept, {terms.concept_scheme_class, terms.concept_class}},
        {terms.in_scheme, {std::nullopt, terms.concept_scheme_class}},
    };

    auto literal = [&](TermId id) { return rdf::is_literal(closure.pool()[id]); };

    // Transitive joins run over their own adjacency lists; the graph
    // indexes mix predicates and would make the join quadratic on deep
    // hierarchies. Each worklist triple is registered exactly once.
    using Adjacency = std::unordered_map<TermId, std::vector<TermId>>;
    std::unordered_map<TermId, Adjacency> successors, predecessors;

    std::deque<IdTriple> work(closure.triples().begin(), closure.triples().end());
    auto add = [&](IdTriple t) {
        if (closure.insert(t)) work.push_back(t);
    };

    while (!work.empty()) {
        IdTriple t = work.front();
        work.pop_front();

        if (auto it = terms.superproperties.find(t.p); it != terms.superproperties.end()) {
            for (TermId super : it->second) add({t.s, super, t.o});
        }
        if (!literal(t.o)) {
            if (auto it = terms.inverses.find(t.p); it != terms.inverses.end())
                add({t.o, it->second, t.s});
            if (terms.symmetric.count(t.p)) add({t.o, t.p, t.s});
        }
        if (terms.transitive.count(t.p) && !literal(t.o)) {
            Adjacency& succ = successors[t.p];
            Adjacency& pred = predecessors[t.p];
            std::vector<IdTriple> joins;
            if (auto it = succ.find(t.o); it != succ.end()) {
                for (TermId x : it->second) joins.push_back({t.s, t.p, x});
            }
            if (auto it = pred.find(t.s); it != pred.end()) {
                for (TermId x : it->second) joins.push_back({x, t.p, t.o});
            }
            succ[t.s].push_back(t.o);
            pred[t.o].push_back(t.s);
            for (IdTriple j : joins) add(j);
        }
        if (auto it = type_rules.find(t.p); it != type_rules.end()) {
            if (it->second.subject_type) add({t.s, terms.rdf_type, *it->second.subject_type});
            if (it->second.object_type && !literal(t.o))
                add({t.o, terms.rdf_type, *it->second.object_type});
        }
    }
    return closure;
}

rdf::Graph entail(const rdf::Graph& asserted) {
    Terms terms(*asserted.pool_ptr());
    return entail(asserted, terms);
}

namespace {

// Prefixes of `iri` that end just past a '/' or '#'.
void candidate_prefixes(const std::string& iri, std::vector<std::string>& out) {
    std::size_t scheme_end = iri.find("://");
    std::size_t floor = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    for (std::size_t i = floor; i < iri.size(); ++i) {
        if (iri[i] == '/' || iri[i] == '#') out.push_back(iri.substr(0, i + 1));
    }
}

}  // namespace

std::string infer_namespace(const rdf::Graph& graph) {
    const rdf::TermPool& pool = graph.pool();
    auto type_id = pool.find(rdf::Term{rdf::Iri{std::string(kRdfType)}});
    auto concept_id = pool.find(rdf::Term{rdf::Iri{std::string(iri::Concept)}});

    std::vector<std::string> concept_iris;
    if (type_id && concept_id) {
        graph.scan(std::nullopt, *type_id, *concept_id, [&](IdTriple t) {
            const rdf::Term& s = pool[t.s];
            if (rdf::is_iri(s)) concept_iris.push_back(rdf::as_iri(s).value);
        });
    }
    if (concept_iris.empty()) throw NoConceptsError();

    std::map<std::string, std::size_t> counts;
    std::vector<std::string> candidates;
    for (const std::string& iri : concept_iris) {
        candidates.clear();
        candidate_prefixes(iri, candidates);
        for (const std::string& c : candidates) ++counts[c];
    }

    const std::size_t total = concept_iris.size();
    std::string best;
    std::size_t best_count = 0;
    bool best_majority = false;
    for (const auto& [prefix, count] : counts) {
        bool majority = count * 2 > total;
        auto better = [&]() {
            if (majority != best_majority) return majority;
            if (majority) {
                // Among majority candidates the longest prefix wins.
                if (prefix.size() != best.size()) return prefix.size() > best.size();
                return count > best_count;
            }
            if (count != best_count) return count > best_count;
            return prefix.size() > best.size();
        };
        if (best.empty() || better()) {
            best = prefix;
            best_count = count;
            best_majority = majority;
        }
    }
    return best;
}

bool Vocabulary::in_namespace(const rdf::Term& t) const {
    return rdf::is_iri(t) && rdf::as_iri(t).value.starts_with(namespace_prefix_);
}

std::string Vocabulary::iri_of(TermId id) const {
    const rdf::Term& t = pool()[id];
    if (rdf::is_iri(t)) return rdf::as_iri(t).value;
    return rdf::to_ntriples(t);
}

Vocabulary Vocabulary::build(rdf::Graph asserted, std::optional<std::string> namespace_prefix) {
    Vocabulary v;
    v.terms_ = std::make_shared<Terms>(asserted.pool());
    v.asserted_ = std::move(asserted);
    v.entailed_ = entail(v.asserted_, *v.terms_);

    const Terms& T = *v.terms_;
    const rdf::TermPool& pool = v.entailed_.pool();

    if (namespace_prefix) {
        v.namespace_prefix_ = std::move(*namespace_prefix);
    } else {
        v.namespace_prefix_ = infer_namespace(v.entailed_);
    }

    v.entailed_.scan(std::nullopt, T.rdf_type, T.concept_class, [&](IdTriple t) {
        if (rdf::is_resource(pool[t.s]) && v.concept_set_.insert(t.s).second)
            v.concepts_.push_back(t.s);
    });
    v.entailed_.scan(std::nullopt, T.rdf_type, T.concept_scheme_class, [&](IdTriple t) {
        if (rdf::is_resource(pool[t.s])) v.schemes_.push_back(t.s);
    });

    for (TermId c : v.concepts_) {
        if (v.in_namespace(pool[c])) {
            v.authoritative_.push_back(c);
            v.authoritative_set_.insert(c);
        }
    }

    for (const IdTriple& t : v.entailed_.triples()) {
        if (T.semantic_relation_family.count(t.p) && v.concept_set_.count(t.s) &&
            v.concept_set_.count(t.o)) {
            v.semantic_relations_.push_back(t);
        }
    }

    // IR and LV come from the asserted graph's terms.
    std::unordered_set<TermId> resource_set;
    std::unordered_set<TermId> literal_set;
    for (const IdTriple& t : v.asserted_.triples()) {
        for (TermId id : {t.s, t.p, t.o}) {
            const rdf::Term& term = pool[id];
            if (rdf::is_resource(term)) {
                if (resource_set.insert(id).second) v.resources_.push_back(id);
            } else if (rdf::as_literal(term).is_untyped_plain()) {
                if (literal_set.insert(id).second) v.plain_literals_.push_back(id);
            }
        }
    }

    auto term_order = [&pool](TermId a, TermId b) { return rdf::compare(pool[a], pool[b]) < 0; };
    std::sort(v.concepts_.begin(), v.concepts_.end(), term_order);
    std::sort(v.authoritative_.begin(), v.authoritative_.end(), term_order);
    std::sort(v.schemes_.begin(), v.schemes_.end(), term_order);
    std::sort(v.resources_.begin(), v.resources_.end(), term_order);
    std::sort(v.plain_literals_.begin(), v.plain_literals_.end(), term_order);
    return v;
}

VocabStats Vocabulary::stats() const { return compute_stats(*this); }

VocabStats compute_stats(const Vocabulary& v) {
    VocabStats s;
    s.concepts = v.concepts().size();
    s.authoritative_concepts = v.authoritative_concepts().size();
    s.concept_schemes = v.concept_schemes().size();

    const Terms& T = v.terms();
    const std::unordered_set<rdf::TermId> concept_label_props = {T.pref_label, T.alt_label,
                                                                 T.hidden_label};
    for (const IdTriple& t : v.asserted().triples()) {
        if (concept_label_props.count(t.p) && v.is_concept(t.s)) ++s.concept_labels;
        if (T.semantic_relation_family.count(t.p)) ++s.semantic_relations;
    }
    return s;
}

}  // namespace skoslint::skos
