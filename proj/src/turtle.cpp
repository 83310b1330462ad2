#include "skoslint/turtle.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace skoslint::rdf {

namespace {

constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

struct UriParts {
    std::string scheme;     // without ':'
    std::string authority;  // without '//'
    std::string path;
    std::string query;      // with '?' when present
    bool has_authority = false;
};

UriParts split_uri(const std::string& uri) {
    UriParts parts;
    std::size_t i = 0;
    std::size_t colon = uri.find(':');
    std::size_t slash = uri.find('/');
    if (colon != std::string::npos && (slash == std::string::npos || colon < slash)) {
        parts.scheme = uri.substr(0, colon);
        i = colon + 1;
    }
    if (uri.compare(i, 2, "//") == 0) {
        parts.has_authority = true;
        std::size_t end = uri.find_first_of("/?#", i + 2);
        if (end == std::string::npos) end = uri.size();
        parts.authority = uri.substr(i + 2, end - i - 2);
        i = end;
    }
    std::size_t qpos = uri.find_first_of("?#", i);
    if (qpos == std::string::npos) {
        parts.path = uri.substr(i);
    } else {
        parts.path = uri.substr(i, qpos - i);
        if (uri[qpos] == '?') {
            std::size_t frag = uri.find('#', qpos);
            parts.query = frag == std::string::npos ? uri.substr(qpos) : uri.substr(qpos, frag - qpos);
        }
    }
    return parts;
}

std::string remove_dot_segments(const std::string& full_path) {
    std::vector<std::string> out;
    bool absolute = !full_path.empty() && full_path[0] == '/';
    std::string path = absolute ? full_path.substr(1) : full_path;
    std::size_t i = 0;
    while (i < path.size()) {
        std::size_t j = path.find('/', i);
        std::string seg =
            j == std::string::npos ? path.substr(i) : path.substr(i, j - i);
        i = j == std::string::npos ? path.size() : j + 1;
        if (seg == ".") continue;
        if (seg == "..") {
            if (!out.empty()) out.pop_back();
            continue;
        }
        out.push_back(seg);
    }
    std::string joined;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k || absolute) joined += '/';
        joined += out[k];
    }
    if (!path.empty() && path.back() == '/' && (joined.empty() || joined.back() != '/'))
        joined += '/';
    if (joined.empty() && absolute) joined = "/";
    return joined;
}

}  // namespace

std::string resolve_iri_reference(const std::string& base, const std::string& reference) {
    std::size_t colon = reference.find(':');
    std::size_t delim = reference.find_first_of("/?#");
    if (colon != std::string::npos && (delim == std::string::npos || colon < delim))
        return reference;  // already absolute

    UriParts b = split_uri(base);
    std::string prefix = b.scheme + ":";
    if (b.has_authority) prefix += "//" + b.authority;

    if (reference.empty()) return prefix + b.path + b.query;
    if (reference[0] == '#') return prefix + b.path + b.query + reference;
    if (reference[0] == '?') return prefix + b.path + reference;
    if (reference.compare(0, 2, "//") == 0) return b.scheme + ":" + reference;
    if (reference[0] == '/') return prefix + remove_dot_segments(reference);

    std::string merged;
    std::size_t last_slash = b.path.rfind('/');
    if (last_slash == std::string::npos)
        merged = b.has_authority ? "/" + reference : reference;
    else
        merged = b.path.substr(0, last_slash + 1) + reference;
    std::size_t qpos = merged.find_first_of("?#");
    std::string tail;
    if (qpos != std::string::npos) {
        tail = merged.substr(qpos);
        merged = merged.substr(0, qpos);
    }
    return prefix + remove_dot_segments(merged) + tail;
}

namespace {

bool is_pn_local_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == ':' || c == '%' || static_cast<unsigned char>(c) >= 0x80;
}

class TurtleParser {
public:
    TurtleParser(Graph& graph, std::string_view text, const ParseOptions& options,
                 std::vector<ParseDiagnostic>* diagnostics)
        : graph_(graph),
          text_(text),
          options_(options),
          diagnostics_(diagnostics),
          blank_prefix_(options.blank_node_prefix) {}

    void run() {
        while (true) {
            skip_ws_and_comments();
            if (pos_ >= text_.size()) return;
            std::size_t statement_start = pos_;
            try {
                statement();
            } catch (const SyntaxError& e) {
                if (!options_.lenient) throw;
                if (diagnostics_) diagnostics_->push_back(e.diagnostic());
                recover(statement_start);
            }
        }
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError({line_, column(), message});
    }

    [[noreturn]] void fail_unsupported(const std::string& message) const {
        throw UnsupportedFeature({line_, column(), message});
    }

    std::size_t column() const { return pos_ - line_start_ + 1; }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char take() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            line_start_ = pos_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws_and_comments();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }

    bool accept(char c) {
        skip_ws_and_comments();
        if (peek() != c) return false;
        take();
        return true;
    }

    bool accept_keyword(std::string_view kw) {
        skip_ws_and_comments();
        if (text_.size() - pos_ < kw.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
                std::tolower(static_cast<unsigned char>(kw[i])))
                return false;
        }
        char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':')
            return false;
        for (std::size_t i = 0; i < kw.size(); ++i) take();
        return true;
    }

    // On error in lenient mode, resynchronize after the next top-level '.'.
    void recover(std::size_t statement_start) {
        if (pos_ <= statement_start) pos_ = statement_start;
        int bracket_depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '"' || c == '\'') {
                skip_string_for_recovery(c);
                continue;
            }
            take();
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '[') {
                ++bracket_depth;
            } else if (c == ']') {
                if (bracket_depth > 0) --bracket_depth;
            } else if (c == '.' && bracket_depth == 0) {
                return;
            }
        }
    }

    void skip_string_for_recovery(char quote) {
        bool is_long = peek(1) == quote && peek(2) == quote;
        take();
        if (is_long) {
            take();
            take();
            while (pos_ < text_.size()) {
                if (peek() == quote && peek(1) == quote && peek(2) == quote) {
                    take();
                    take();
                    take();
                    return;
                }
                take();
            }
        } else {
            while (pos_ < text_.size()) {
                char c = take();
                if (c == '\\' && pos_ < text_.size())
                    take();
                else if (c == quote || c == '\n')
                    return;
            }
        }
    }

    void statement() {
        skip_ws_and_comments();
        if (peek() == '@') {
            take();
            if (accept_keyword("prefix")) {
                prefix_directive();
                expect('.');
                return;
            }
            if (accept_keyword("base")) {
                base_directive();
                expect('.');
                return;
            }
            fail("unknown directive");
        }
        if (accept_keyword("prefix") || accept_keyword("PREFIX")) {
            prefix_directive();
            return;
        }
        if (accept_keyword("base") || accept_keyword("BASE")) {
            base_directive();
            return;
        }
        triples();
        expect('.');
    }

    void prefix_directive() {
        skip_ws_and_comments();
        std::string name = parse_pname_ns();
        skip_ws_and_comments();
        Iri iri = parse_iriref();
        prefixes_[name] = iri.value;
    }

    void base_directive() {
        skip_ws_and_comments();
        base_ = parse_iriref().value;
    }

    std::string parse_pname_ns() {
        std::string name;
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == ':') break;
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                  c == '.' || static_cast<unsigned char>(c) >= 0x80))
                fail("invalid prefix name");
            name += take();
        }
        expect(':');
        return name;
    }

    Iri parse_iriref() {
        skip_ws_and_comments();
        if (peek() != '<') fail("expected IRI");
        take();
        std::string value;
        while (true) {
            char c = take();
            if (c == '>') break;
            if (c == ' ' || c == '<' || c == '"' || c == '\n') fail("invalid character in IRI");
            if (c == '\\') {
                char e = take();
                std::uint32_t code = 0;
                unsigned digits = e == 'u' ? 4 : e == 'U' ? 8 : 0;
                if (digits == 0) fail("invalid escape in IRI");
                for (unsigned i = 0; i < digits; ++i) {
                    char h = take();
                    code <<= 4;
                    if (h >= '0' && h <= '9')
                        code |= static_cast<std::uint32_t>(h - '0');
                    else if (h >= 'a' && h <= 'f')
                        code |= static_cast<std::uint32_t>(h - 'a' + 10);
                    else if (h >= 'A' && h <= 'F')
                        code |= static_cast<std::uint32_t>(h - 'A' + 10);
                    else
                        fail("invalid hex digit in escape");
                }
                if (code < 0x80) {
                    value += static_cast<char>(code);
                } else if (code < 0x800) {
                    value += static_cast<char>(0xc0 | (code >> 6));
                    value += static_cast<char>(0x80 | (code & 0x3f));
                } else if (code < 0x10000) {
                    value += static_cast<char>(0xe0 | (code >> 12));
                    value += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
                    value += static_cast<char>(0x80 | (code & 0x3f));
                } else {
                    value += static_cast<char>(0xf0 | (code >> 18));
                    value += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
                    value += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
                    value += static_cast<char>(0x80 | (code & 0x3f));
                }
            } else {
                value += c;
            }
        }
        std::size_t colon = value.find(':');
        std::size_t delim = value.find_first_of("/?#");
        bool relative = colon == std::string::npos || (delim != std::string::npos && colon > delim);
        if (relative) {
            if (base_.empty()) fail("relative IRI without base: " + value);
            value = resolve_iri_reference(base_, value);
        }
        return Iri{std::move(value)};
    }

    Iri parse_prefixed_name() {
        std::string prefix;
        while (pos_ < text_.size() && peek() != ':') {
            char c = peek();
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                  c == '.' || static_cast<unsigned char>(c) >= 0x80))
                break;
            prefix += take();
        }
        if (peek() != ':') fail("expected ':' in prefixed name");
        take();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail("undeclared prefix: '" + prefix + "'");
        std::string local;
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == '\\') {
                take();
                local += take();  // reserved-char escape
                continue;
            }
            if (!is_pn_local_char(c)) break;
            local += take();
        }
        // A trailing '.' terminates the statement, not the name.
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_;
        }
        return Iri{it->second + local};
    }

    Iri parse_verb() {
        skip_ws_and_comments();
        if (peek() == '<') return parse_iriref();
        if (peek() == 'a') {
            char after = peek(1);
            if (after == ' ' || after == '\t' || after == '\r' || after == '\n' || after == '<' ||
                after == '[' || after == '_' || after == '"' || after == '\'' || after == '#') {
                take();
                return Iri{std::string(kRdfType)};
            }
        }
        return parse_prefixed_name();
    }

    Term parse_subject() {
        skip_ws_and_comments();
        char c = peek();
        if (c == '<') {
            if (peek(1) == '<') fail_unsupported("quoted triples are not supported");
            return parse_iriref();
        }
        if (c == '(') fail_unsupported("RDF collections are not supported");
        if (c == '_') return parse_blank_node();
        return parse_prefixed_name();
    }

    Term parse_blank_node() {
        expect('_');
        expect(':');
        std::string label;
        while (pos_ < text_.size()) {
            char c = peek();
            bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                      c == '.' || static_cast<unsigned char>(c) >= 0x80;
            if (!ok) break;
            label += take();
        }
        while (!label.empty() && label.back() == '.') {
            label.pop_back();
            --pos_;
        }
        if (label.empty()) fail("empty blank node label");
        auto it = blank_map_.find(label);
        if (it == blank_map_.end())
            it = blank_map_.emplace(label, next_blank_label()).first;
        return BlankNode{it->second};
    }

    std::string next_blank_label() { return blank_prefix_ + "b" + std::to_string(blank_counter_++); }

    Term parse_object() {
        skip_ws_and_comments();
        char c = peek();
        if (c == '<') {
            if (peek(1) == '<') fail_unsupported("quoted triples are not supported");
            return parse_iriref();
        }
        if (c == '(') fail_unsupported("RDF collections are not supported");
        if (c == '[') return parse_blank_node_property_list();
        if (c == '_') return parse_blank_node();
        if (c == '"' || c == '\'') return parse_rdf_literal(c);
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return parse_numeric_literal();
        if (accept_keyword("true"))
            return Literal::with_datatype("true", Iri{std::string(kXsdBoolean)});
        if (accept_keyword("false"))
            return Literal::with_datatype("false", Iri{std::string(kXsdBoolean)});
        return parse_prefixed_name();
    }

    Term parse_blank_node_property_list() {
        expect('[');
        Term node = BlankNode{next_blank_label()};
        skip_ws_and_comments();
        if (peek() != ']') predicate_object_list(node);
        expect(']');
        return node;
    }

    Literal parse_rdf_literal(char quote) {
        std::string lexical = parse_string(quote);
        if (peek() == '@') {
            take();
            std::string tag;
            while (pos_ < text_.size()) {
                char c = peek();
                bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-';
                if (!ok) break;
                tag += take();
            }
            if (tag.empty()) fail("empty language tag");
            return Literal::with_language(std::move(lexical), std::move(tag));
        }
        if (peek() == '^' && peek(1) == '^') {
            take();
            take();
            skip_ws_and_comments();
            Iri dt = peek() == '<' ? parse_iriref() : parse_prefixed_name();
            return Literal::with_datatype(std::move(lexical), std::move(dt));
        }
        return Literal(std::move(lexical));
    }

    std::string parse_string(char quote) {
        take();  // opening quote
        bool is_long = peek() == quote && peek(1) == quote;
        if (is_long) {
            take();
            take();
        }
        std::string value;
        while (true) {
            if (pos_ >= text_.size()) fail("unterminated string");
            char c = peek();
            if (c == quote) {
                if (!is_long) {
                    take();
                    break;
                }
                if (peek(1) == quote && peek(2) == quote) {
                    take();
                    take();
                    take();
                    break;
                }
                value += take();
                continue;
            }
            if (c == '\n' && !is_long) fail("newline in string");
            take();
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
                    case 'u': {
                        std::uint32_t code = hex_escape(4);
                        append_escape(value, code);
                        break;
                    }
                    case 'U': {
                        std::uint32_t code = hex_escape(8);
                        append_escape(value, code);
                        break;
                    }
                    default: fail("invalid string escape");
                }
            } else {
                value += c;
            }
        }
        return value;
    }

    std::uint32_t hex_escape(unsigned digits) {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < digits; ++i) {
            char h = take();
            code <<= 4;
            if (h >= '0' && h <= '9')
                code |= static_cast<std::uint32_t>(h - '0');
            else if (h >= 'a' && h <= 'f')
                code |= static_cast<std::uint32_t>(h - 'a' + 10);
            else if (h >= 'A' && h <= 'F')
                code |= static_cast<std::uint32_t>(h - 'A' + 10);
            else
                fail("invalid hex digit in escape");
        }
        return code;
    }

    static void append_escape(std::string& out, std::uint32_t code) {
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

    Literal parse_numeric_literal() {
        std::string lexical;
        bool has_dot = false, has_exp = false;
        if (peek() == '+' || peek() == '-') lexical += take();
        while (pos_ < text_.size()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lexical += take();
            } else if (c == '.' && !has_dot && !has_exp &&
                       std::isdigit(static_cast<unsigned char>(peek(1)))) {
                has_dot = true;
                lexical += take();
            } else if ((c == 'e' || c == 'E') && !has_exp && !lexical.empty() &&
                       std::isdigit(static_cast<unsigned char>(lexical.back()))) {
                has_exp = true;
                lexical += take();
                if (peek() == '+' || peek() == '-') lexical += take();
            } else {
                break;
            }
        }
        if (lexical.empty() || !std::isdigit(static_cast<unsigned char>(lexical.back())))
            fail("malformed numeric literal");
        std::string_view dt = has_exp ? kXsdDouble : has_dot ? kXsdDecimal : kXsdInteger;
        return Literal::with_datatype(std::move(lexical), Iri{std::string(dt)});
    }

    void emit(Term subject, Iri predicate, Term object) {
        graph_.insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
    }

    void predicate_object_list(const Term& subject) {
        while (true) {
            Iri verb = parse_verb();
            while (true) {
                Term object = parse_object();
                emit(subject, verb, std::move(object));
                if (!accept(',')) break;
            }
            if (!accept(';')) return;
            skip_ws_and_comments();
            // dangling ';' before '.' or ']'
            char c = peek();
            if (c == '.' || c == ']' || c == ';') {
                while (accept(';')) {
                }
                return;
            }
        }
    }

    void triples() {
        skip_ws_and_comments();
        if (peek() == '[') {
            Term node = parse_blank_node_property_list();
            skip_ws_and_comments();
            if (peek() != '.') predicate_object_list(node);
            return;
        }
        Term subject = parse_subject();
        predicate_object_list(subject);
    }

    Graph& graph_;
    std::string_view text_;
    const ParseOptions& options_;
    std::vector<ParseDiagnostic>* diagnostics_;

    std::unordered_map<std::string, std::string> prefixes_;
    std::string base_;
    std::unordered_map<std::string, std::string> blank_map_;
    std::string blank_prefix_;
    std::size_t blank_counter_ = 0;

    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
};

}  // namespace

void parse_turtle_into(Graph& graph, std::string_view text, const ParseOptions& options,
                       std::vector<ParseDiagnostic>* diagnostics) {
    TurtleParser parser(graph, text, options, diagnostics);
    parser.run();
}

Graph parse_turtle(std::string_view text, const ParseOptions& options,
                   std::vector<ParseDiagnostic>* diagnostics) {
    Graph g;
    parse_turtle_into(g, text, options, diagnostics);
    return g;
}

Graph parse_turtle(std::istream& in, const ParseOptions& options,
                   std::vector<ParseDiagnostic>* diagnostics) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_turtle(buf.str(), options, diagnostics);
}

}  // namespace skoslint::rdf
