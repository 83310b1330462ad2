#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "skoslint/checks_labeling.hpp"
#include "skoslint/checks_linkeddata.hpp"
#include "skoslint/checks_structure.hpp"
#include "skoslint/cli.hpp"
#include "skoslint/ntriples.hpp"
#include "skoslint/report.hpp"
#include "skoslint/runner.hpp"
#include "skoslint/turtle.hpp"
#include "skoslint/version.hpp"
#include "skoslint/vocabulary.hpp"

namespace py = pybind11;
using namespace skoslint;

namespace {

rdf::Graph parse_with_format(const std::string& text, const std::string& format, bool lenient) {
    rdf::ParseOptions options;
    options.lenient = lenient;
    if (format == "ntriples" || format == "nt") return rdf::parse_ntriples(text, options);
    if (format == "turtle" || format == "ttl") return rdf::parse_turtle(text, options);
    throw py::value_error("format must be 'turtle' or 'ntriples'");
}

rdf::Graph parse_file(const std::string& path, std::optional<std::string> format, bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string fmt;
    if (format) {
        fmt = *format;
    } else if (path.ends_with(".nt")) {
        fmt = "ntriples";
    } else if (path.ends_with(".ttl") || path.ends_with(".turtle")) {
        fmt = "turtle";
    } else {
        throw py::value_error("cannot detect format of '" + path + "'; pass format=");
    }
    return parse_with_format(buf.str(), fmt, lenient);
}

// Accepts plain IRI strings, "_:label" blanks, and N-Triples literals.
rdf::Term term_from_string(const std::string& s) {
    if (s.starts_with("_:") || s.starts_with('"') || s.starts_with('<'))
        return rdf::parse_term(s);
    return rdf::Iri{s};
}

skos::Vocabulary build_vocabulary_py(const rdf::Graph& graph,
                                     std::optional<std::string> namespace_prefix) {
    return skos::Vocabulary::build(graph.clone(), std::move(namespace_prefix));
}

std::vector<std::string> id_strings(const skos::Vocabulary& v,
                                    const std::vector<rdf::TermId>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (rdf::TermId id : ids) out.push_back(v.iri_of(id));
    return out;
}

checks::NetworkConfig network_config(double timeout_seconds, std::size_t max_redirects,
                                     std::size_t max_parallel, double subsample,
                                     std::uint64_t seed, std::optional<std::string> endpoint,
                                     std::size_t host_delay_ms) {
    checks::NetworkConfig cfg;
    cfg.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(timeout_seconds * 1000.0));
    cfg.max_redirects = max_redirects;
    cfg.max_parallel_requests = max_parallel;
    cfg.subsample_rate = subsample;
    cfg.random_seed = seed;
    cfg.sparql_endpoint = std::move(endpoint);
    cfg.host_delay = std::chrono::milliseconds(host_delay_ms);
    return cfg;
}

std::string analyze_json(const skos::Vocabulary& v, bool offline,
                         const std::vector<std::string>& issues, double threshold,
                         bool case_sensitive, std::optional<std::string> endpoint,
                         double subsample, std::uint64_t seed, double timeout_seconds,
                         bool deterministic) {
    RunOptions options;
    for (const std::string& key : issues) {
        auto id = issue_from_key(key);
        if (!id) throw py::value_error("unknown issue id: '" + key + "'");
        options.issues.push_back(*id);
    }
    options.offline = offline;
    options.check.threshold = threshold;
    options.check.case_sensitive = case_sensitive;
    options.network = network_config(timeout_seconds, 10, 8, subsample, seed, endpoint, 500);

    auto results = run_checks(v, options);

    report::ReportMetadata metadata;
    metadata.tool_version = std::string(kVersion);
    metadata.namespace_prefix = v.namespace_prefix();
    metadata.run_config.offline = offline;
    metadata.run_config.threshold = threshold;
    metadata.run_config.subsample_rate = subsample;
    metadata.run_config.random_seed = seed;
    metadata.run_config.timeout_ms = static_cast<std::size_t>(timeout_seconds * 1000.0);
    metadata.run_config.sparql_endpoint = options.network.sparql_endpoint;
    if (!deterministic) metadata.timestamp = report::utc_timestamp();

    auto doc = report::assemble(v.stats(), std::move(results), std::move(metadata));
    return report::render_json(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SKOS vocabulary quality checks";
    m.attr("__version__") = std::string(kVersion);

    py::register_exception<SyntaxError>(m, "RdfSyntaxError", PyExc_ValueError);
    py::register_exception<NoConceptsError>(m, "NoConceptsError", PyExc_ValueError);
    py::register_exception<InvalidThresholdError>(m, "InvalidThresholdError", PyExc_ValueError);

    py::class_<rdf::Graph>(m, "Graph")
        .def(py::init<>())
        .def("__len__", &rdf::Graph::size)
        .def(
            "match",
            [](const rdf::Graph& g, std::optional<std::string> s, std::optional<std::string> p,
               std::optional<std::string> o) {
                std::optional<rdf::Term> st, ot;
                std::optional<rdf::Iri> pt;
                if (s) st = term_from_string(*s);
                if (p) pt = rdf::Iri{*p};
                if (o) ot = term_from_string(*o);
                std::vector<std::tuple<std::string, std::string, std::string>> out;
                for (const rdf::Triple& t : g.match(st, pt, ot)) {
                    out.emplace_back(rdf::to_ntriples(t.subject), t.predicate.value,
                                     rdf::to_ntriples(t.object));
                }
                return out;
            },
            py::arg("subject") = py::none(), py::arg("predicate") = py::none(),
            py::arg("object") = py::none())
        .def("to_ntriples", [](const rdf::Graph& g) { return rdf::to_ntriples(g); })
        .def("merge", &rdf::Graph::merge);

    py::class_<skos::VocabStats>(m, "VocabStats")
        .def_readonly("concepts", &skos::VocabStats::concepts)
        .def_readonly("authoritative_concepts", &skos::VocabStats::authoritative_concepts)
        .def_readonly("concept_labels", &skos::VocabStats::concept_labels)
        .def_readonly("semantic_relations", &skos::VocabStats::semantic_relations)
        .def_readonly("concept_schemes", &skos::VocabStats::concept_schemes)
        .def("as_dict", [](const skos::VocabStats& s) {
            py::dict d;
            d["concepts"] = s.concepts;
            d["authoritative_concepts"] = s.authoritative_concepts;
            d["concept_labels"] = s.concept_labels;
            d["semantic_relations"] = s.semantic_relations;
            d["concept_schemes"] = s.concept_schemes;
            return d;
        });

    py::class_<skos::Vocabulary>(m, "Vocabulary")
        .def_property_readonly("namespace", &skos::Vocabulary::namespace_prefix)
        .def("stats", &skos::Vocabulary::stats)
        .def("concepts",
             [](const skos::Vocabulary& v) { return id_strings(v, v.concepts()); })
        .def("authoritative_concepts",
             [](const skos::Vocabulary& v) { return id_strings(v, v.authoritative_concepts()); })
        .def("concept_schemes",
             [](const skos::Vocabulary& v) { return id_strings(v, v.concept_schemes()); });

    m.def("parse_string", &parse_with_format, py::arg("text"), py::arg("format") = "turtle",
          py::arg("lenient") = true);
    m.def("parse_file", &parse_file, py::arg("path"), py::arg("format") = py::none(),
          py::arg("lenient") = true);
    m.def("build_vocabulary", &build_vocabulary_py, py::arg("graph"),
          py::arg("namespace") = py::none());
    m.def("infer_namespace", [](const rdf::Graph& g) { return skos::infer_namespace(g); });
    m.def(
        "entail",
        [](const rdf::Graph& g) { return skos::entail(g); },
        py::arg("graph"));
    m.def("validate_language_tag",
          [](const std::string& tag) { return lang::validate_language_tag(tag); });

    m.def("check_language_tags", [](const skos::Vocabulary& v) {
        py::list out;
        for (const auto& f : checks::check_language_tags(v)) {
            py::dict d;
            d["resource"] = f.resource_id();
            d["property"] = f.property.value;
            d["literal"] = f.literal.lexical();
            d["problem"] = f.problem == checks::TagProblem::omitted ? "omitted" : "invalid";
            out.append(std::move(d));
        }
        return out;
    });
    m.def("check_language_coverage", [](const skos::Vocabulary& v) {
        py::dict out;
        for (const auto& [concept_id, missing] : checks::check_language_coverage(v)) {
            out[py::str(concept_id)] =
                std::vector<std::string>(missing.begin(), missing.end());
        }
        return out;
    });
    m.def("check_undocumented_concepts", &checks::check_undocumented_concepts);
    m.def(
        "check_label_conflicts",
        [](const skos::Vocabulary& v, double threshold, bool case_sensitive) {
            auto sim = case_sensitive ? checks::LabelSimilarity::case_sensitive_equality()
                                      : checks::LabelSimilarity::case_insensitive_equality();
            py::list out;
            for (const auto& c : checks::check_label_conflicts(v, threshold, sim)) {
                py::dict d;
                d["concept_a"] = c.concept_a;
                d["concept_b"] = c.concept_b;
                d["label_a"] = c.label_a.lexical();
                d["label_b"] = c.label_b.lexical();
                d["similarity"] = c.similarity;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("vocabulary"), py::arg("threshold") = 1.0, py::arg("case_sensitive") = false);

    m.def("find_orphan_concepts", &checks::find_orphan_concepts);
    m.def("find_components",
          [](const skos::Vocabulary& v) { return checks::find_components(v).components; });
    m.def("find_hierarchy_cycles", [](const skos::Vocabulary& v) {
        std::vector<std::vector<std::string>> out;
        for (auto& c : checks::find_hierarchy_cycles(v)) out.push_back(std::move(c.concepts));
        return out;
    });
    m.def("find_valueless_associative_relations",
          &checks::find_valueless_associative_relations);
    m.def("find_solely_transitive_pairs", &checks::find_solely_transitive_pairs);
    m.def("find_schemes_without_top_concepts", &checks::find_schemes_without_top_concepts);
    m.def("find_top_concepts_with_broader", &checks::find_top_concepts_with_broader);
    m.def("find_missing_outlinks", &checks::find_missing_outlinks);
    m.def("find_undefined_skos_resources",
          [](const skos::Vocabulary& v) { return checks::find_undefined_skos_resources(v); });

    m.def("analyze_json", &analyze_json, py::arg("vocabulary"), py::arg("offline") = true,
          py::arg("issues") = std::vector<std::string>{}, py::arg("threshold") = 1.0,
          py::arg("case_sensitive") = false, py::arg("sparql_endpoint") = py::none(),
          py::arg("subsample") = 1.0, py::arg("seed") = 42, py::arg("timeout") = 30.0,
          py::arg("deterministic") = true,
          "Run checks and return the JSON report as a string.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        return cli::run(args, std::cout, std::cerr);
    });
}
