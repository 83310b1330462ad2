#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "skoslint/errors.hpp"
#include "skoslint/ntriples.hpp"
#include "skoslint/rdf.hpp"

namespace skoslint::rdf {

// Pragmatic Turtle subset: prefix/base directives, prefixed names, the
// 'a' keyword, predicate lists (';'), object lists (','), blank node
// property lists, quoted/long strings, language tags, datatypes, and
// numeric/boolean shorthand. Collections and quoted triples raise
// UnsupportedFeature.
Graph parse_turtle(std::string_view text, const ParseOptions& options = {},
                   std::vector<ParseDiagnostic>* diagnostics = nullptr);
Graph parse_turtle(std::istream& in, const ParseOptions& options = {},
                   std::vector<ParseDiagnostic>* diagnostics = nullptr);

void parse_turtle_into(Graph& graph, std::string_view text, const ParseOptions& options = {},
                       std::vector<ParseDiagnostic>* diagnostics = nullptr);

// RFC 3986 reference resolution, reduced to the cases Turtle needs.
std::string resolve_iri_reference(const std::string& base, const std::string& reference);

}  // namespace skoslint::rdf
