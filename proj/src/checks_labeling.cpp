#include "skoslint/checks_labeling.hpp"

#include <algorithm>
#include <unordered_map>

#include "skoslint/errors.hpp"

namespace skoslint::checks {

using rdf::IdTriple;
using rdf::TermId;
using skos::Vocabulary;

namespace {

std::string fold(const std::string& s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string term_id_string(const rdf::Term& t) {
    if (rdf::is_iri(t)) return rdf::as_iri(t).value;
    return rdf::to_ntriples(t);
}

bool is_label_or_doc(const skos::Terms& T, TermId p) {
    return T.label_props.count(p) != 0 || T.doc_props.count(p) != 0;
}

}  // namespace

std::string LanguageTagFinding::resource_id() const { return term_id_string(resource); }

std::vector<LanguageTagFinding> check_language_tags(const Vocabulary& v,
                                                    const lang::TagValidation& validation) {
    const skos::Terms& T = v.terms();
    const rdf::TermPool& pool = v.pool();
    std::vector<LanguageTagFinding> findings;
    for (const IdTriple& t : v.asserted().triples()) {
        if (!is_label_or_doc(T, t.p)) continue;
        const rdf::Term& obj = pool[t.o];
        if (!rdf::is_literal(obj)) continue;
        const rdf::Literal& lit = rdf::as_literal(obj);
        if (!lit.is_plain()) continue;
        std::optional<TagProblem> problem;
        if (!lit.language()) {
            problem = TagProblem::omitted;
        } else if (!lang::validate_language_tag(*lit.language(), validation)) {
            problem = TagProblem::invalid;
        }
        if (!problem) continue;
        findings.push_back({pool[t.s], rdf::as_iri(pool[t.p]), lit, *problem});
    }
    std::sort(findings.begin(), findings.end(), [](const auto& a, const auto& b) {
        if (auto c = rdf::compare(a.resource, b.resource); c != 0) return c < 0;
        if (auto c = a.property <=> b.property; c != 0) return c < 0;
        return a.literal < b.literal;
    });
    return findings;
}

std::map<std::string, std::set<std::string>> check_language_coverage(const Vocabulary& v) {
    const skos::Terms& T = v.terms();
    const rdf::TermPool& pool = v.pool();

    std::unordered_map<TermId, std::set<std::string>> tags_by_concept;
    std::set<std::string> global;
    for (const IdTriple& t : v.asserted().triples()) {
        if (!is_label_or_doc(T, t.p) || !v.is_concept(t.s)) continue;
        const rdf::Term& obj = pool[t.o];
        if (!rdf::is_literal(obj)) continue;
        const rdf::Literal& lit = rdf::as_literal(obj);
        if (lit.language_lower().empty()) continue;
        tags_by_concept[t.s].insert(lit.language_lower());
        global.insert(lit.language_lower());
    }

    std::map<std::string, std::set<std::string>> result;
    if (global.empty()) return result;
    for (TermId c : v.concepts()) {
        auto it = tags_by_concept.find(c);
        static const std::set<std::string> kNone;
        const std::set<std::string>& own = it == tags_by_concept.end() ? kNone : it->second;
        if (own.size() == global.size()) continue;
        std::set<std::string> missing;
        std::set_difference(global.begin(), global.end(), own.begin(), own.end(),
                            std::inserter(missing, missing.end()));
        if (!missing.empty()) result.emplace(term_id_string(pool[c]), std::move(missing));
    }
    return result;
}

std::vector<std::string> check_undocumented_concepts(const Vocabulary& v) {
    const skos::Terms& T = v.terms();
    std::unordered_set<TermId> documented;
    for (const IdTriple& t : v.asserted().triples()) {
        if (T.doc_props.count(t.p)) documented.insert(t.s);
    }
    std::vector<std::string> result;
    for (TermId c : v.concepts()) {
        if (!documented.count(c)) result.push_back(term_id_string(v.pool()[c]));
    }
    std::sort(result.begin(), result.end());
    return result;
}

LabelSimilarity LabelSimilarity::case_insensitive_equality() { return LabelSimilarity(); }

LabelSimilarity LabelSimilarity::case_sensitive_equality() {
    LabelSimilarity s;
    s.kind_ = Kind::case_sensitive;
    return s;
}

LabelSimilarity LabelSimilarity::custom(
    std::function<double(const std::string&, const std::string&)> fn) {
    LabelSimilarity s;
    s.kind_ = Kind::custom;
    s.fn_ = std::move(fn);
    return s;
}

double LabelSimilarity::operator()(const std::string& a, const std::string& b) const {
    switch (kind_) {
        case Kind::case_insensitive: return fold(a) == fold(b) ? 1.0 : 0.0;
        case Kind::case_sensitive: return a == b ? 1.0 : 0.0;
        case Kind::custom: return fn_(a, b);
    }
    return 0.0;
}

double levenshtein_ratio(const std::string& a, const std::string& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    double dist = static_cast<double>(prev[b.size()]);
    return 1.0 - dist / static_cast<double>(std::max(a.size(), b.size()));
}

namespace {

struct LabelEntry {
    TermId owner;
    TermId literal;
};

using PairKey = std::pair<std::string, std::string>;

void record_conflict(std::map<PairKey, LabelConflict>& conflicts, const rdf::TermPool& pool,
                     const LabelEntry& x, const LabelEntry& y, double similarity) {
    std::string a = term_id_string(pool[x.owner]);
    std::string b = term_id_string(pool[y.owner]);
    const LabelEntry* ea = &x;
    const LabelEntry* eb = &y;
    if (b < a) {
        std::swap(a, b);
        std::swap(ea, eb);
    }
    PairKey key{a, b};
    auto it = conflicts.find(key);
    if (it != conflicts.end() && it->second.similarity >= similarity) return;
    LabelConflict c;
    c.concept_a = key.first;
    c.concept_b = key.second;
    c.label_a = rdf::as_literal(pool[ea->literal]);
    c.label_b = rdf::as_literal(pool[eb->literal]);
    c.similarity = similarity;
    conflicts.insert_or_assign(std::move(key), std::move(c));
}

}  // namespace

std::vector<LabelConflict> check_label_conflicts(const Vocabulary& v, double threshold,
                                                 const LabelSimilarity& sim, LabelScope scope) {
    if (!(threshold > 0.0 && threshold <= 1.0)) throw InvalidThresholdError(threshold);

    const skos::Terms& T = v.terms();
    const rdf::TermPool& pool = v.pool();
    std::unordered_set<TermId> label_props = {T.pref_label};
    if (scope == LabelScope::all_label_properties) {
        label_props.insert(T.alt_label);
        label_props.insert(T.hidden_label);
    }

    // Language buckets: equal lowercased tag, or both untagged.
    std::unordered_map<std::string, std::vector<LabelEntry>> buckets;
    for (const IdTriple& t : v.asserted().triples()) {
        if (!label_props.count(t.p) || !v.is_authoritative(t.s)) continue;
        const rdf::Term& obj = pool[t.o];
        if (!rdf::is_literal(obj)) continue;
        buckets[rdf::as_literal(obj).language_lower()].push_back({t.s, t.o});
    }

    std::map<PairKey, LabelConflict> conflicts;
    if (sim.is_equality()) {
        for (auto& [bucket, entries] : buckets) {
            std::unordered_map<std::string, std::vector<LabelEntry>> groups;
            for (const LabelEntry& e : entries) {
                const std::string& lex = rdf::as_literal(pool[e.literal]).lexical();
                groups[sim.folds_case() ? fold(lex) : lex].push_back(e);
            }
            for (auto& [lex, group] : groups) {
                for (std::size_t i = 0; i < group.size(); ++i) {
                    for (std::size_t j = i + 1; j < group.size(); ++j) {
                        if (group[i].owner == group[j].owner) continue;
                        record_conflict(conflicts, pool, group[i], group[j], 1.0);
                    }
                }
            }
        }
    } else {
        for (auto& [bucket, entries] : buckets) {
            for (std::size_t i = 0; i < entries.size(); ++i) {
                for (std::size_t j = i + 1; j < entries.size(); ++j) {
                    if (entries[i].owner == entries[j].owner) continue;
                    double s = sim(rdf::as_literal(pool[entries[i].literal]).lexical(),
                                   rdf::as_literal(pool[entries[j].literal]).lexical());
                    if (s >= threshold) record_conflict(conflicts, pool, entries[i], entries[j], s);
                }
            }
        }
    }

    std::vector<LabelConflict> result;
    result.reserve(conflicts.size());
    for (auto& [key, c] : conflicts) result.push_back(std::move(c));
    return result;
}

}  // namespace skoslint::checks
