#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace skoslint::rdf {

// Absolute IRI. Equality is plain codepoint equality; no normalization
// happens after parser-level unescaping.
struct Iri {
    std::string value;

    auto operator<=>(const Iri&) const = default;
};

struct BlankNode {
    std::string label;

    auto operator<=>(const BlankNode&) const = default;
};

// RDF literal. A literal carries a language tag or a datatype, never both.
// Language tags compare case-insensitively; the original spelling is kept
// for serialization.
class Literal {
public:
    Literal() = default;
    explicit Literal(std::string lexical) : lexical_(std::move(lexical)) {}

    static Literal with_language(std::string lexical, std::string tag);
    static Literal with_datatype(std::string lexical, Iri datatype);

    const std::string& lexical() const { return lexical_; }
    const std::optional<std::string>& language() const { return language_; }
    const std::string& language_lower() const { return language_lower_; }
    const std::optional<Iri>& datatype() const { return datatype_; }

    bool is_plain() const { return !datatype_.has_value(); }
    bool is_untyped_plain() const { return !datatype_ && !language_; }

    bool operator==(const Literal& o) const {
        return lexical_ == o.lexical_ && language_lower_ == o.language_lower_ &&
               datatype_ == o.datatype_;
    }
    std::strong_ordering operator<=>(const Literal& o) const {
        if (auto c = lexical_ <=> o.lexical_; c != 0) return c;
        if (auto c = language_lower_ <=> o.language_lower_; c != 0) return c;
        bool l = datatype_.has_value(), r = o.datatype_.has_value();
        if (l != r) return l <=> r;
        if (!l) return std::strong_ordering::equal;
        return datatype_->value <=> o.datatype_->value;
    }

private:
    std::string lexical_;
    std::optional<std::string> language_;   // original spelling
    std::string language_lower_;            // empty when untagged
    std::optional<Iri> datatype_;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }
inline bool is_resource(const Term& t) { return !is_literal(t); }

const Iri& as_iri(const Term& t);
const Literal& as_literal(const Term& t);

// Total order over terms: IRIs < blank nodes < literals, each by value.
// Used for canonical serialization and report sorting.
std::strong_ordering compare(const Term& a, const Term& b);

inline bool term_less(const Term& a, const Term& b) { return compare(a, b) < 0; }

// Term in N-Triples syntax, e.g. `<http://x>`, `_:b0`, `"hi"@en`.
std::string to_ntriples(const Term& t);

struct Triple {
    Term subject;    // Iri or BlankNode
    Iri predicate;
    Term object;

    bool operator==(const Triple&) const = default;
};

bool triple_less(const Triple& a, const Triple& b);

struct TermHash {
    std::size_t operator()(const Term& t) const;
};

using TermId = std::uint32_t;

// Append-only interning table shared between the asserted and entailed
// graphs of a vocabulary, so that term ids stay comparable across both.
class TermPool {
public:
    TermId intern(const Term& t);
    TermId intern(Term&& t);
    std::optional<TermId> find(const Term& t) const;
    const Term& operator[](TermId id) const { return terms_[id]; }
    std::size_t size() const { return terms_.size(); }

private:
    std::vector<Term> terms_;
    std::unordered_map<Term, TermId, TermHash> ids_;
};

struct IdTriple {
    TermId s = 0;
    TermId p = 0;
    TermId o = 0;

    auto operator<=>(const IdTriple&) const = default;
};

struct IdTripleHash {
    std::size_t operator()(const IdTriple& t) const {
        std::uint64_t h = (std::uint64_t(t.s) << 32) ^ (std::uint64_t(t.p) << 17) ^ t.o;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

// In-memory triple set with per-position indexes. Construction is
// single-writer; afterwards a Graph is immutable and safe to share
// across concurrent readers.
class Graph {
public:
    Graph() : pool_(std::make_shared<TermPool>()) {}
    explicit Graph(std::shared_ptr<TermPool> pool) : pool_(std::move(pool)) {}

    const TermPool& pool() const { return *pool_; }
    TermPool& pool() { return *pool_; }
    const std::shared_ptr<TermPool>& pool_ptr() const { return pool_; }

    // Returns false when the triple was already present (set semantics).
    bool insert(const Triple& t);
    bool insert(IdTriple t);

    bool contains(IdTriple t) const { return set_.count(t) != 0; }
    bool contains(const Triple& t) const;

    std::size_t size() const { return triples_.size(); }
    const std::vector<IdTriple>& triples() const { return triples_; }

    // Pattern match; unbound positions are nullopt. Result is sorted by
    // term order for deterministic consumption.
    std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                              const std::optional<Term>& o) const;

    // Id-level match that visits matching triples without materializing
    // Term values. Any position may be nullopt.
    template <typename F>
    void scan(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
              F&& visit) const {
        const std::vector<std::uint32_t>* candidates = nullptr;
        static const std::vector<std::uint32_t> kEmpty;
        if (s) candidates = &index_entry(by_subject_, *s);
        if (p) {
            const auto& e = index_entry(by_predicate_, *p);
            if (!candidates || e.size() < candidates->size()) candidates = &e;
        }
        if (o) {
            const auto& e = index_entry(by_object_, *o);
            if (!candidates || e.size() < candidates->size()) candidates = &e;
        }
        if (candidates) {
            for (auto idx : *candidates) {
                const IdTriple& t = triples_[idx];
                if ((s && t.s != *s) || (p && t.p != *p) || (o && t.o != *o)) continue;
                visit(t);
            }
        } else {
            for (const IdTriple& t : triples_) visit(t);
        }
    }

    const Term& term(TermId id) const { return (*pool_)[id]; }
    Triple materialize(IdTriple t) const;

    // Copy sharing the term pool.
    Graph clone() const;

    // Fresh id namespace for incoming blank nodes, then union.
    void merge(const Graph& other);

    bool operator==(const Graph& other) const;

private:
    static const std::vector<std::uint32_t>& index_entry(
        const std::unordered_map<TermId, std::vector<std::uint32_t>>& index, TermId id);

    std::shared_ptr<TermPool> pool_;
    std::vector<IdTriple> triples_;
    std::unordered_set<IdTriple, IdTripleHash> set_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_subject_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_predicate_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_object_;
    std::uint32_t merge_epoch_ = 0;
};

}  // namespace skoslint::rdf
