#include "skoslint/rdf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace skoslint::rdf {

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Literal Literal::with_language(std::string lexical, std::string tag) {
    Literal l;
    l.lexical_ = std::move(lexical);
    l.language_lower_ = ascii_lower(tag);
    l.language_ = std::move(tag);
    return l;
}

Literal Literal::with_datatype(std::string lexical, Iri datatype) {
    Literal l;
    l.lexical_ = std::move(lexical);
    l.datatype_ = std::move(datatype);
    return l;
}

const Iri& as_iri(const Term& t) { return std::get<Iri>(t); }
const Literal& as_literal(const Term& t) { return std::get<Literal>(t); }

std::strong_ordering compare(const Term& a, const Term& b) {
    if (a.index() != b.index()) return a.index() <=> b.index();
    if (is_iri(a)) return std::get<Iri>(a) <=> std::get<Iri>(b);
    if (is_blank(a)) return std::get<BlankNode>(a) <=> std::get<BlankNode>(b);
    return std::get<Literal>(a) <=> std::get<Literal>(b);
}

namespace {

void escape_into(std::string& out, const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    out += "\\u00";
                    out += hex[c >> 4];
                    out += hex[c & 0xf];
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
}

}  // namespace

std::string to_ntriples(const Term& t) {
    std::string out;
    if (is_iri(t)) {
        out += '<';
        out += std::get<Iri>(t).value;
        out += '>';
    } else if (is_blank(t)) {
        out += "_:";
        out += std::get<BlankNode>(t).label;
    } else {
        const Literal& l = std::get<Literal>(t);
        out += '"';
        escape_into(out, l.lexical());
        out += '"';
        if (l.language()) {
            out += '@';
            out += *l.language();
        } else if (l.datatype()) {
            out += "^^<";
            out += l.datatype()->value;
            out += '>';
        }
    }
    return out;
}

bool triple_less(const Triple& a, const Triple& b) {
    if (auto c = compare(a.subject, b.subject); c != 0) return c < 0;
    if (auto c = a.predicate <=> b.predicate; c != 0) return c < 0;
    return compare(a.object, b.object) < 0;
}

std::size_t TermHash::operator()(const Term& t) const {
    std::size_t h = t.index();
    std::hash<std::string> hs;
    if (is_iri(t)) {
        h = hash_combine(h, hs(std::get<Iri>(t).value));
    } else if (is_blank(t)) {
        h = hash_combine(h, hs(std::get<BlankNode>(t).label));
    } else {
        const Literal& l = std::get<Literal>(t);
        h = hash_combine(h, hs(l.lexical()));
        h = hash_combine(h, hs(l.language_lower()));
        if (l.datatype()) h = hash_combine(h, hs(l.datatype()->value));
    }
    return h;
}

TermId TermPool::intern(const Term& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
    ids_.emplace(t, id);
    return id;
}

TermId TermPool::intern(Term&& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(std::move(t));
    ids_.emplace(terms_.back(), id);
    return id;
}

std::optional<TermId> TermPool::find(const Term& t) const {
    auto it = ids_.find(t);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

bool Graph::insert(const Triple& t) {
    if (is_literal(t.subject)) throw std::invalid_argument("triple subject must not be a literal");
    return insert(IdTriple{pool_->intern(t.subject), pool_->intern(Term{t.predicate}),
                           pool_->intern(t.object)});
}

bool Graph::insert(IdTriple t) {
    auto [it, fresh] = set_.insert(t);
    if (!fresh) return false;
    auto idx = static_cast<std::uint32_t>(triples_.size());
    triples_.push_back(t);
    by_subject_[t.s].push_back(idx);
    by_predicate_[t.p].push_back(idx);
    by_object_[t.o].push_back(idx);
    return true;
}

bool Graph::contains(const Triple& t) const {
    auto s = pool_->find(t.subject);
    auto p = pool_->find(Term{t.predicate});
    auto o = pool_->find(t.object);
    if (!s || !p || !o) return false;
    return contains(IdTriple{*s, *p, *o});
}

const std::vector<std::uint32_t>& Graph::index_entry(
    const std::unordered_map<TermId, std::vector<std::uint32_t>>& index, TermId id) {
    static const std::vector<std::uint32_t> kEmpty;
    auto it = index.find(id);
    return it == index.end() ? kEmpty : it->second;
}

Triple Graph::materialize(IdTriple t) const {
    return Triple{(*pool_)[t.s], std::get<Iri>((*pool_)[t.p]), (*pool_)[t.o]};
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
    std::optional<TermId> sid, pid, oid;
    if (s) {
        sid = pool_->find(*s);
        if (!sid) return {};
    }
    if (p) {
        pid = pool_->find(Term{*p});
        if (!pid) return {};
    }
    if (o) {
        oid = pool_->find(*o);
        if (!oid) return {};
    }
    std::vector<Triple> out;
    scan(sid, pid, oid, [&](IdTriple t) { out.push_back(materialize(t)); });
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

Graph Graph::clone() const {
    Graph g(pool_);
    g.triples_ = triples_;
    g.set_ = set_;
    g.by_subject_ = by_subject_;
    g.by_predicate_ = by_predicate_;
    g.by_object_ = by_object_;
    g.merge_epoch_ = merge_epoch_;
    return g;
}

void Graph::merge(const Graph& other) {
    ++merge_epoch_;
    const std::string prefix = "m" + std::to_string(merge_epoch_) + ":";
    std::unordered_map<TermId, TermId> remap;
    auto translate = [&](TermId id) -> TermId {
        const Term& t = other.pool()[id];
        if (is_blank(t)) {
            auto it = remap.find(id);
            if (it != remap.end()) return it->second;
            TermId fresh = pool_->intern(Term{BlankNode{prefix + std::get<BlankNode>(t).label}});
            remap.emplace(id, fresh);
            return fresh;
        }
        return pool_->intern(t);
    };
    for (const IdTriple& t : other.triples()) {
        insert(IdTriple{translate(t.s), translate(t.p), translate(t.o)});
    }
}

bool Graph::operator==(const Graph& other) const {
    if (size() != other.size()) return false;
    for (const IdTriple& t : triples_) {
        if (!other.contains(materialize(t))) return false;
    }
    return true;
}

}  // namespace skoslint::rdf
