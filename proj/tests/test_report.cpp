#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "skoslint/errors.hpp"
#include "skoslint/report.hpp"

using namespace skoslint;
using namespace skoslint::report;

namespace {

ReportMetadata metadata(std::optional<std::string> timestamp = std::nullopt) {
    ReportMetadata m;
    m.tool_version = "0.1.0";
    m.namespace_prefix = "http://ex.org/v/";
    m.run_config.offline = true;
    m.timestamp = std::move(timestamp);
    return m;
}

}  // namespace

TEST_CASE("assemble: zero results give an empty issue list") {
    ReportDocument doc = assemble(skos::VocabStats{}, {}, metadata());
    CHECK(doc.issues.empty());
}

TEST_CASE("assemble: results are put into canonical order") {
    std::vector<IssueResult> results;
    results.push_back(IssueResult::of_resources(IssueId::broken_links, {"http://x/a"}));
    results.push_back(IssueResult::of_resources(IssueId::orphan_concepts, {"http://x/b"}));
    results.push_back(
        IssueResult::of_resources(IssueId::omitted_invalid_language_tags, {"http://x/c"}));
    ReportDocument doc = assemble(skos::VocabStats{}, std::move(results), metadata());
    REQUIRE(doc.issues.size() == 3);
    CHECK(doc.issues[0].id == IssueId::omitted_invalid_language_tags);
    CHECK(doc.issues[1].id == IssueId::orphan_concepts);
    CHECK(doc.issues[2].id == IssueId::broken_links);
}

TEST_CASE("assemble: duplicate issue ids are rejected") {
    std::vector<IssueResult> results;
    results.push_back(IssueResult::of_resources(IssueId::orphan_concepts, {}));
    results.push_back(IssueResult::of_resources(IssueId::orphan_concepts, {}));
    CHECK_THROWS_AS(assemble(skos::VocabStats{}, std::move(results), metadata()),
                    DuplicateIssueError);
}

TEST_CASE("assemble: skipped checks keep their reason and empty affected list") {
    std::vector<IssueResult> results;
    results.push_back(IssueResult::skipped(IssueId::missing_inlinks, "offline mode"));
    ReportDocument doc = assemble(skos::VocabStats{}, std::move(results), metadata());
    REQUIRE(doc.issues.size() == 1);
    CHECK(doc.issues[0].skipped_reason == "offline mode");
    CHECK(doc.issues[0].count == 0);
    CHECK(doc.issues[0].affected.empty());
}

TEST_CASE("render_json: two renders of the same document are byte-identical") {
    std::vector<IssueResult> results;
    results.push_back(IssueResult::of_resources(IssueId::orphan_concepts, {"http://x/b", "http://x/a"}));
    ReportDocument doc = assemble(skos::VocabStats{1, 1, 2, 3, 0}, std::move(results), metadata());
    CHECK(render_json(doc) == render_json(doc));
}

TEST_CASE("render_json: extrapolated count lands in the count field") {
    IssueResult r = IssueResult::of_resources(IssueId::missing_inlinks, {"http://x/a"});
    r.extrapolated = true;
    r.count = 20;
    ReportDocument doc = assemble(skos::VocabStats{}, {r}, metadata());
    auto j = nlohmann::json::parse(render_json(doc));
    CHECK(j["issues"][0]["extrapolated"] == true);
    CHECK(j["issues"][0]["count"] == 20);
    CHECK(j["issues"][0]["affected"].size() == 1);
}

TEST_CASE("render_json/parse_report_json: structural round trip") {
    std::vector<IssueResult> results;
    results.push_back(IssueResult::of_resources(IssueId::orphan_concepts, {"http://x/a"}));
    results.push_back(IssueResult::of_pairs(IssueId::label_conflicts, {{"http://x/a", "http://x/b"}}));
    results.push_back(IssueResult::of_groups(IssueId::weakly_connected_components,
                                             {{"http://x/a", "http://x/b", "http://x/c"}}));
    IssueResult extrapolated = IssueResult::of_resources(IssueId::broken_links, {"http://x/d"});
    extrapolated.extrapolated = true;
    extrapolated.count = 40;
    results.push_back(extrapolated);
    results.push_back(IssueResult::skipped(IssueId::missing_inlinks, "offline mode"));

    ReportMetadata m = metadata(std::string("2012-05-01T00:00:00Z"));
    m.run_config.sparql_endpoint = "http://127.0.0.1:9999/sparql";
    m.run_config.subsample_rate = 0.5;
    ReportDocument doc = assemble(skos::VocabStats{5, 4, 10, 7, 1}, std::move(results), m);

    ReportDocument parsed = parse_report_json(render_json(doc));
    CHECK(parsed == doc);
    // and the round trip is render-stable
    CHECK(render_json(parsed) == render_json(doc));
}

TEST_CASE("render_text: empty document is header and statistics only") {
    ReportDocument doc = assemble(skos::VocabStats{2, 2, 4, 1, 1}, {}, metadata());
    std::string text = render_text(doc);
    CHECK(text.find("statistics:") != std::string::npos);
    CHECK(text.find("concepts: 2") != std::string::npos);
    CHECK(text.find("issues:") == std::string::npos);
}

TEST_CASE("render_text: extrapolated counts carry the asterisk") {
    IssueResult r = IssueResult::of_resources(IssueId::missing_inlinks, {});
    r.extrapolated = true;
    r.count = 171980;
    ReportDocument doc = assemble(skos::VocabStats{}, {r}, metadata());
    std::string text = render_text(doc);
    CHECK(text.find("Missing In-Links: 171,980*\n") != std::string::npos);
}

TEST_CASE("render_text: full verbosity lists affected resources indented") {
    IssueResult r = IssueResult::of_resources(IssueId::orphan_concepts,
                                              {"http://x/a", "http://x/b", "http://x/c"});
    ReportDocument doc = assemble(skos::VocabStats{}, {r}, metadata());
    std::string text = render_text(doc, Verbosity::full);
    CHECK(text.find("    http://x/a\n") != std::string::npos);
    CHECK(text.find("    http://x/b\n") != std::string::npos);
    CHECK(text.find("    http://x/c\n") != std::string::npos);
}

TEST_CASE("render_text: pairs and groups format by entry kind") {
    std::vector<IssueResult> results;
    results.push_back(IssueResult::of_pairs(IssueId::label_conflicts, {{"http://x/a", "http://x/b"}}));
    results.push_back(IssueResult::of_pairs(IssueId::solely_transitively_related_concepts,
                                            {{"http://x/c", "http://x/d"}}));
    results.push_back(IssueResult::of_groups(IssueId::cyclic_hierarchical_relations,
                                             {{"http://x/e", "http://x/f"}}));
    ReportDocument doc = assemble(skos::VocabStats{}, std::move(results), metadata());
    std::string text = render_text(doc, Verbosity::full);
    CHECK(text.find("http://x/a <-> http://x/b") != std::string::npos);
    CHECK(text.find("http://x/c -> http://x/d") != std::string::npos);
    CHECK(text.find("http://x/e, http://x/f") != std::string::npos);
}

TEST_CASE("render_text: skipped checks say why") {
    ReportDocument doc = assemble(
        skos::VocabStats{}, {IssueResult::skipped(IssueId::broken_links, "offline mode")},
        metadata());
    CHECK(render_text(doc).find("Broken Links: skipped (offline mode)") != std::string::npos);
}

TEST_CASE("format_count groups thousands") {
    CHECK(format_count(0) == "0");
    CHECK(format_count(999) == "999");
    CHECK(format_count(1000) == "1,000");
    CHECK(format_count(171980) == "171,980");
    CHECK(format_count(1490316) == "1,490,316");
}

TEST_CASE("issue_found: one component is the ideal structure") {
    IssueResult wcc = IssueResult::of_groups(IssueId::weakly_connected_components,
                                             {{"http://x/a", "http://x/b"}});
    CHECK_FALSE(issue_found(wcc));
    wcc = IssueResult::of_groups(IssueId::weakly_connected_components,
                                 {{"http://x/a", "http://x/b"}, {"http://x/c", "http://x/d"}});
    CHECK(issue_found(wcc));

    CHECK_FALSE(issue_found(IssueResult::of_resources(IssueId::orphan_concepts, {})));
    CHECK(issue_found(IssueResult::of_resources(IssueId::orphan_concepts, {"http://x/a"})));
    CHECK_FALSE(issue_found(IssueResult::skipped(IssueId::broken_links, "offline mode")));
}

TEST_CASE("issue catalog: fifteen stable ids in canonical order") {
    auto catalog = issue_catalog();
    REQUIRE(catalog.size() == 15);
    CHECK(catalog[0].key == "omitted_invalid_language_tags");
    CHECK(catalog[3].key == "label_conflicts");
    CHECK(catalog[4].key == "orphan_concepts");
    CHECK(catalog[11].key == "missing_inlinks");
    CHECK(catalog[14].key == "undefined_skos_resources");
    CHECK(issue_from_key("weakly_connected_components").has_value());
    CHECK_FALSE(issue_from_key("nonsense").has_value());
}
