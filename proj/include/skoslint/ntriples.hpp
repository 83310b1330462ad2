#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "skoslint/errors.hpp"
#include "skoslint/rdf.hpp"

namespace skoslint::rdf {

struct ParseOptions {
    // Lenient mode skips malformed statements and records them as
    // diagnostics; strict mode throws SyntaxError at the first one.
    bool lenient = false;
    // Prepended to rewritten blank node labels, letting callers merge
    // graphs from several documents without label collisions.
    std::string blank_node_prefix;
};

Graph parse_ntriples(std::string_view text, const ParseOptions& options = {},
                     std::vector<ParseDiagnostic>* diagnostics = nullptr);
Graph parse_ntriples(std::istream& in, const ParseOptions& options = {},
                     std::vector<ParseDiagnostic>* diagnostics = nullptr);

void parse_ntriples_into(Graph& graph, std::string_view text, const ParseOptions& options = {},
                         std::vector<ParseDiagnostic>* diagnostics = nullptr);

// Canonical serialization: one line per triple, sorted by term order.
std::string to_ntriples(const Graph& graph);
void write_ntriples(std::ostream& out, const Graph& graph);

// Parses a single N-Triples term token: `<iri>`, `_:label`, or a literal.
// Throws SyntaxError on malformed input.
Term parse_term(std::string_view token);

}  // namespace skoslint::rdf
