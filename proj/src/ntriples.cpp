#include "skoslint/ntriples.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace skoslint::rdf {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Encodes a unicode code point as UTF-8.
void append_utf8(std::string& out, std::uint32_t code) {
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xc0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else if (code < 0x10000) {
        out += static_cast<char>(0xe0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else {
        out += static_cast<char>(0xf0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    }
}

class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError({line_no_, pos_ + 1, message});
    }

    void skip_ws() {
        while (pos_ < line_.size() && is_ws(line_[pos_])) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= line_.size() || line_[pos_] == '#';
    }

    char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

    char take() {
        if (pos_ >= line_.size()) fail("unexpected end of line");
        return line_[pos_++];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint32_t hex_code(unsigned digits) {
        std::uint32_t v = 0;
        for (unsigned i = 0; i < digits; ++i) {
            char c = take();
            v <<= 4;
            if (c >= '0' && c <= '9')
                v |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                v |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                v |= static_cast<std::uint32_t>(c - 'A' + 10);
            else
                fail("invalid hex digit in escape");
        }
        return v;
    }

    // <...> with \u and \U escapes resolved.
    Iri parse_iriref() {
        expect('<');
        std::string value;
        while (true) {
            char c = take();
            if (c == '>') break;
            if (c == ' ' || c == '<' || c == '"') fail("invalid character in IRI");
            if (c == '\\') {
                char e = take();
                if (e == 'u')
                    append_utf8(value, hex_code(4));
                else if (e == 'U')
                    append_utf8(value, hex_code(8));
                else
                    fail("invalid escape in IRI");
            } else {
                value += c;
            }
        }
        if (value.find(':') == std::string::npos) fail("relative IRI: " + value);
        return Iri{std::move(value)};
    }

    std::string parse_blank_label() {
        expect('_');
        expect(':');
        std::string label;
        while (pos_ < line_.size()) {
            char c = line_[pos_];
            bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '_' || c == '-' || c == '.' ||
                      static_cast<unsigned char>(c) >= 0x80;
            if (!ok) break;
            label += c;
            ++pos_;
        }
        while (!label.empty() && label.back() == '.') {
            label.pop_back();
            --pos_;
        }
        if (label.empty()) fail("empty blank node label");
        return label;
    }

    std::string parse_quoted_string() {
        expect('"');
        std::string value;
        while (true) {
            char c = take();
            if (c == '"') break;
            if (c == '\\') {
                char e = take();
                switch (e) {
                    case 't': value += '\t'; break;
                    case 'b': value += '\b'; break;
                    case 'n': value += '\n'; break;
                    case 'r': value += '\r'; break;
                    case 'f': value += '\f'; break;
                    case '"': value += '"'; break;
                    case '\'': value += '\''; break;
                    case '\\': value += '\\'; break;
                    case 'u': append_utf8(value, hex_code(4)); break;
                    case 'U': append_utf8(value, hex_code(8)); break;
                    default: fail("invalid string escape");
                }
            } else {
                value += c;
            }
        }
        return value;
    }

    std::string parse_langtag() {
        expect('@');
        std::string tag;
        while (pos_ < line_.size()) {
            char c = line_[pos_];
            bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-';
            if (!ok) break;
            tag += c;
            ++pos_;
        }
        if (tag.empty()) fail("empty language tag");
        return tag;
    }

    Literal parse_literal() {
        std::string lexical = parse_quoted_string();
        if (peek() == '@') return Literal::with_language(std::move(lexical), parse_langtag());
        if (peek() == '^') {
            expect('^');
            expect('^');
            return Literal::with_datatype(std::move(lexical), parse_iriref());
        }
        return Literal(std::move(lexical));
    }

private:
    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

class BlankRelabeler {
public:
    explicit BlankRelabeler(std::string prefix) : prefix_(std::move(prefix)) {}

    BlankNode fresh(const std::string& document_label) {
        auto it = map_.find(document_label);
        if (it == map_.end()) {
            it = map_.emplace(document_label, prefix_ + "b" + std::to_string(map_.size())).first;
        }
        return BlankNode{it->second};
    }

    BlankNode anonymous() {
        std::string key = "\x01anon" + std::to_string(anon_++);
        return fresh(key);
    }

private:
    std::string prefix_;
    std::unordered_map<std::string, std::string> map_;
    std::size_t anon_ = 0;
};

}  // namespace

void parse_ntriples_into(Graph& graph, std::string_view text, const ParseOptions& options,
                         std::vector<ParseDiagnostic>* diagnostics) {
    BlankRelabeler blanks(options.blank_node_prefix);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        ++line_no;
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        try {
            LineParser p(line, line_no);
            if (p.at_end()) continue;

            Term subject;
            char c = p.peek();
            if (c == '<')
                subject = p.parse_iriref();
            else if (c == '_')
                subject = blanks.fresh(p.parse_blank_label());
            else
                p.fail("expected IRI or blank node subject");

            p.skip_ws();
            Iri predicate = p.parse_iriref();

            p.skip_ws();
            Term object;
            c = p.peek();
            if (c == '<')
                object = p.parse_iriref();
            else if (c == '_')
                object = blanks.fresh(p.parse_blank_label());
            else if (c == '"')
                object = p.parse_literal();
            else
                p.fail("expected IRI, blank node, or literal object");

            p.skip_ws();
            p.expect('.');
            if (!p.at_end()) p.fail("trailing content after '.'");

            graph.insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
        } catch (const SyntaxError& e) {
            if (!options.lenient) throw;
            if (diagnostics) diagnostics->push_back(e.diagnostic());
        }
    }
}

Graph parse_ntriples(std::string_view text, const ParseOptions& options,
                     std::vector<ParseDiagnostic>* diagnostics) {
    Graph g;
    parse_ntriples_into(g, text, options, diagnostics);
    return g;
}

Graph parse_ntriples(std::istream& in, const ParseOptions& options,
                     std::vector<ParseDiagnostic>* diagnostics) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ntriples(buf.str(), options, diagnostics);
}

Term parse_term(std::string_view token) {
    LineParser p(token, 1);
    if (p.at_end()) throw SyntaxError({1, 1, "empty term"});
    char c = p.peek();
    Term term;
    if (c == '<')
        term = p.parse_iriref();
    else if (c == '_')
        term = BlankNode{p.parse_blank_label()};
    else if (c == '"')
        term = p.parse_literal();
    else
        p.fail("expected IRI, blank node, or literal");
    if (!p.at_end()) p.fail("trailing content after term");
    return term;
}

void write_ntriples(std::ostream& out, const Graph& graph) {
    std::vector<Triple> all;
    all.reserve(graph.size());
    for (const IdTriple& t : graph.triples()) all.push_back(graph.materialize(t));
    std::sort(all.begin(), all.end(), triple_less);
    for (const Triple& t : all) {
        out << to_ntriples(t.subject) << ' ' << to_ntriples(Term{t.predicate}) << ' '
            << to_ntriples(t.object) << " .\n";
    }
}

std::string to_ntriples(const Graph& graph) {
    std::ostringstream out;
    write_ntriples(out, graph);
    return out.str();
}

}  // namespace skoslint::rdf
