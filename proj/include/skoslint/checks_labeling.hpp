#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skoslint/language.hpp"
#include "skoslint/vocabulary.hpp"

namespace skoslint::checks {

enum class TagProblem { omitted, invalid };

struct LanguageTagFinding {
    rdf::Term resource;
    rdf::Iri property;
    rdf::Literal literal;
    TagProblem problem;

    std::string resource_id() const;
};

// One finding per (resource, property, literal) where the property is a
// labeling or documentation property, the literal carries no datatype,
// and its language tag is absent or invalid.
std::vector<LanguageTagFinding> check_language_tags(const skos::Vocabulary& v,
                                                    const lang::TagValidation& validation = {});

// Concepts whose language tag set is a proper subset of the vocabulary's
// global tag set, mapped to the missing tags (lowercased).
std::map<std::string, std::set<std::string>> check_language_coverage(const skos::Vocabulary& v);

// Concepts without any asserted documentation property.
std::vector<std::string> check_undocumented_concepts(const skos::Vocabulary& v);

struct LabelConflict {
    std::string concept_a;  // lexicographically smaller
    std::string concept_b;
    rdf::Literal label_a;
    rdf::Literal label_b;
    double similarity = 0.0;
};

enum class LabelScope { all_label_properties, pref_label_only };

// Pluggable label similarity. The built-in default is case-insensitive
// string equality; equality kinds get a hash-grouping fast path instead
// of pairwise comparison.
class LabelSimilarity {
public:
    static LabelSimilarity case_insensitive_equality();
    static LabelSimilarity case_sensitive_equality();
    static LabelSimilarity custom(std::function<double(const std::string&, const std::string&)> fn);

    bool is_equality() const { return kind_ != Kind::custom; }
    bool folds_case() const { return kind_ == Kind::case_insensitive; }
    double operator()(const std::string& a, const std::string& b) const;

private:
    enum class Kind { case_insensitive, case_sensitive, custom };
    Kind kind_ = Kind::case_insensitive;
    std::function<double(const std::string&, const std::string&)> fn_;
};

// Unordered pairs of authoritative concepts with at least one label
// combination in the same language bucket meeting the threshold.
// Throws InvalidThresholdError when threshold is outside (0,1].
std::vector<LabelConflict> check_label_conflicts(
    const skos::Vocabulary& v, double threshold = 1.0,
    const LabelSimilarity& sim = LabelSimilarity::case_insensitive_equality(),
    LabelScope scope = LabelScope::all_label_properties);

// Normalized Levenshtein similarity in [0,1].
double levenshtein_ratio(const std::string& a, const std::string& b);

}  // namespace skoslint::checks
