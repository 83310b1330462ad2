#include "skoslint/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skoslint/errors.hpp"
#include "skoslint/ntriples.hpp"
#include "skoslint/report.hpp"
#include "skoslint/runner.hpp"
#include "skoslint/turtle.hpp"
#include "skoslint/version.hpp"

namespace skoslint::cli {

namespace {

enum class InputFormat { auto_detect, ntriples, turtle };

struct CommonInputArgs {
    std::vector<std::string> inputs;
    std::string format = "auto";
    std::string namespace_prefix;
    bool lenient = true;
    bool strict = false;
};

struct AnalyzeArgs : CommonInputArgs {
    std::vector<std::string> issues;
    std::vector<std::string> exclude_issues;
    double threshold = 1.0;
    bool case_sensitive = false;
    bool tags_grammar_only = false;
    bool offline = false;
    std::string sparql_endpoint;
    double subsample = 1.0;
    std::uint64_t seed = 42;
    double timeout_seconds = 30.0;
    std::size_t max_redirects = 10;
    std::size_t max_parallel = 8;
    std::size_t host_delay_ms = 500;
    bool accept_2xx = false;
    std::string output = "text";
    bool full = false;
    bool deterministic = false;
};

void add_input_options(CLI::App* cmd, CommonInputArgs& args) {
    cmd->add_option("inputs", args.inputs, "input files ('-' for standard input)")->required();
    cmd->add_option("--format", args.format, "input format override")
        ->check(CLI::IsMember({"auto", "nt", "ntriples", "ttl", "turtle"}))
        ->default_val("auto");
    cmd->add_option("--namespace", args.namespace_prefix,
                    "vocabulary namespace prefix (inferred from concept IRIs when omitted)");
    cmd->add_flag("--lenient", args.lenient, "skip malformed statements (default)");
    cmd->add_flag("--strict", args.strict, "abort on the first malformed statement");
}

InputFormat detect_format(const std::string& path, const std::string& override_format) {
    if (override_format == "nt" || override_format == "ntriples") return InputFormat::ntriples;
    if (override_format == "ttl" || override_format == "turtle") return InputFormat::turtle;
    if (path.ends_with(".nt")) return InputFormat::ntriples;
    if (path.ends_with(".ttl") || path.ends_with(".turtle")) return InputFormat::turtle;
    throw CLI::ValidationError("cannot detect format of '" + path +
                               "'; pass --format nt|ttl");
}

rdf::Graph load_inputs(const CommonInputArgs& args, std::ostream& err) {
    rdf::ParseOptions options;
    options.lenient = !args.strict;

    rdf::Graph graph;
    std::vector<ParseDiagnostic> diagnostics;
    for (std::size_t i = 0; i < args.inputs.size(); ++i) {
        const std::string& path = args.inputs[i];
        std::string text;
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open input file: " + path);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        InputFormat format = detect_format(path == "-" ? "" : path, args.format);
        options.blank_node_prefix = "f" + std::to_string(i) + ":";
        diagnostics.clear();
        if (format == InputFormat::ntriples) {
            rdf::parse_ntriples_into(graph, text, options, &diagnostics);
        } else {
            rdf::parse_turtle_into(graph, text, options, &diagnostics);
        }
        if (!diagnostics.empty()) {
            err << "warning: " << diagnostics.size() << " malformed statement(s) skipped in "
                << path << '\n';
            for (const auto& d : diagnostics) err << "  " << d.to_string() << '\n';
        }
    }
    return graph;
}

skos::Vocabulary build_vocabulary(rdf::Graph graph, const std::string& namespace_prefix,
                                  std::ostream& err) {
    if (!namespace_prefix.empty())
        return skos::Vocabulary::build(std::move(graph), namespace_prefix);
    try {
        return skos::Vocabulary::build(graph.clone(), std::optional<std::string>{});
    } catch (const NoConceptsError&) {
        err << "warning: no concepts found; proceeding with empty namespace\n";
        return skos::Vocabulary::build(std::move(graph), std::string{});
    }
}

std::vector<IssueId> resolve_issue_filter(const std::vector<std::string>& include,
                                          const std::vector<std::string>& exclude) {
    auto parse = [](const std::vector<std::string>& keys) {
        std::vector<IssueId> ids;
        for (const std::string& key : keys) {
            auto id = issue_from_key(key);
            if (!id) throw CLI::ValidationError("unknown issue id: '" + key + "'");
            ids.push_back(*id);
        }
        return ids;
    };
    std::vector<IssueId> included = parse(include);
    if (included.empty()) {
        for (const IssueInfo& info : issue_catalog()) included.push_back(info.id);
    }
    for (IssueId id : parse(exclude)) {
        std::erase(included, id);
    }
    return included;
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    rdf::Graph graph = load_inputs(args, err);
    skos::Vocabulary vocabulary = build_vocabulary(std::move(graph), args.namespace_prefix, err);

    RunOptions options;
    options.issues = resolve_issue_filter(args.issues, args.exclude_issues);
    options.offline = args.offline;
    options.check.threshold = args.threshold;
    options.check.case_sensitive = args.case_sensitive;
    options.check.tag_validation.grammar_only = args.tags_grammar_only;
    options.network.timeout =
        std::chrono::milliseconds(static_cast<std::int64_t>(args.timeout_seconds * 1000.0));
    options.network.max_redirects = args.max_redirects;
    options.network.max_parallel_requests = std::max<std::size_t>(1, args.max_parallel);
    options.network.subsample_rate = args.subsample;
    options.network.random_seed = args.seed;
    options.network.host_delay = std::chrono::milliseconds(args.host_delay_ms);
    options.network.accept_any_2xx = args.accept_2xx;
    if (!args.sparql_endpoint.empty()) options.network.sparql_endpoint = args.sparql_endpoint;

    auto results = run_checks(vocabulary, options);

    report::ReportMetadata metadata;
    metadata.tool_version = std::string(kVersion);
    metadata.namespace_prefix = vocabulary.namespace_prefix();
    metadata.run_config.offline = options.offline;
    metadata.run_config.threshold = options.check.threshold;
    metadata.run_config.subsample_rate = options.network.subsample_rate;
    metadata.run_config.random_seed = options.network.random_seed;
    metadata.run_config.timeout_ms = static_cast<std::size_t>(options.network.timeout.count());
    metadata.run_config.max_redirects = options.network.max_redirects;
    metadata.run_config.max_parallel_requests = options.network.max_parallel_requests;
    metadata.run_config.sparql_endpoint = options.network.sparql_endpoint;
    if (!args.deterministic) metadata.timestamp = report::utc_timestamp();

    auto document = report::assemble(vocabulary.stats(), std::move(results), std::move(metadata));

    if (args.output == "json") {
        out << report::render_json(document);
    } else {
        out << report::render_text(document, args.full ? report::Verbosity::full
                                                       : report::Verbosity::summary);
    }

    for (const auto& result : document.issues) {
        if (report::issue_found(result)) return 1;
    }
    return 0;
}

int run_stats(const CommonInputArgs& args, std::ostream& out, std::ostream& err) {
    rdf::Graph graph = load_inputs(args, err);
    skos::Vocabulary vocabulary = build_vocabulary(std::move(graph), args.namespace_prefix, err);
    skos::VocabStats stats = vocabulary.stats();
    out << "concepts: " << report::format_count(stats.concepts) << '\n';
    out << "authoritative concepts: " << report::format_count(stats.authoritative_concepts)
        << '\n';
    out << "concept labels: " << report::format_count(stats.concept_labels) << '\n';
    out << "semantic relations: " << report::format_count(stats.semantic_relations) << '\n';
    out << "concept schemes: " << report::format_count(stats.concept_schemes) << '\n';
    return 0;
}

int run_issues(std::ostream& out) {
    for (const IssueInfo& info : issue_catalog()) {
        out << info.key << ": " << info.description << '\n';
    }
    return 0;
}

bool starts_with_subcommand(const std::vector<std::string>& args) {
    for (const std::string& a : args) {
        if (a == "--help" || a == "-h" || a == "--version") return true;
        if (!a.starts_with("-")) return a == "analyze" || a == "stats" || a == "issues";
    }
    return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SKOS vocabulary quality checker", std::string(kToolName)};
    app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "run quality checks and print a report");
    add_input_options(analyze, analyze_args);
    analyze->add_option("--issues", analyze_args.issues, "only run these issue ids")
        ->delimiter(',');
    analyze->add_option("--exclude-issues", analyze_args.exclude_issues,
                        "skip these issue ids")
        ->delimiter(',');
    analyze->add_option("--threshold", analyze_args.threshold,
                        "label similarity threshold in (0,1]");
    analyze->add_flag("--case-sensitive", analyze_args.case_sensitive,
                      "compare labels case-sensitively");
    analyze->add_flag("--tags-grammar-only", analyze_args.tags_grammar_only,
                      "validate language tags by grammar only, without the ISO 639 list");
    analyze->add_flag("--offline", analyze_args.offline,
                      "skip checks that need the network");
    analyze->add_option("--sparql-endpoint", analyze_args.sparql_endpoint,
                        "SPARQL endpoint for the in-link check")
        ->envname("SKOSLINT_SPARQL_ENDPOINT");
    analyze->add_option("--subsample", analyze_args.subsample,
                        "fraction of resources to probe, e.g. 0.05 for the 5% sample")
        ->check(CLI::Range(0.000001, 1.0));
    analyze->add_option("--seed", analyze_args.seed, "subsampling seed");
    analyze->add_option("--timeout", analyze_args.timeout_seconds, "network timeout in seconds");
    analyze->add_option("--max-redirects", analyze_args.max_redirects,
                        "redirects to follow per URI");
    analyze->add_option("--parallel", analyze_args.max_parallel,
                        "maximum concurrent network requests");
    analyze->add_option("--host-delay", analyze_args.host_delay_ms,
                        "politeness delay per host in milliseconds");
    analyze->add_flag("--accept-2xx", analyze_args.accept_2xx,
                      "treat any 2xx response as healthy instead of only 200");
    analyze->add_option("--output", analyze_args.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    analyze->add_flag("--full", analyze_args.full, "list affected resources in text output");
    analyze->add_flag("--deterministic", analyze_args.deterministic,
                      "omit timestamps for byte-identical output");

    CommonInputArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "print vocabulary statistics");
    add_input_options(stats, stats_args);

    CLI::App* issues = app.add_subcommand("issues", "list the issue ids this tool checks");

    if (args.empty()) {
        out << app.help();
        return 2;
    }
    std::vector<std::string> argv = args;
    if (!starts_with_subcommand(argv)) argv.insert(argv.begin(), "analyze");
    std::reverse(argv.begin(), argv.end());  // CLI11's vector overload wants reversed args

    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_args, out, err);
        if (stats->parsed()) return run_stats(stats_args, out, err);
        if (issues->parsed()) return run_issues(out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidThresholdError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace skoslint::cli
