#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "skoslint/cli.hpp"
#include "support/test_util.hpp"

using namespace skoslint;
using skoslint::testing::fixture_path;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze on a clean fixture exits 0") {
    auto run = run_cli({"analyze", fixture_path("clean.ttl"), "--offline"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("Orphan Concepts: 0") != std::string::npos);
    CHECK(run.out.find("skipped (offline mode)") != std::string::npos);
}

TEST_CASE("the analyze subcommand is the default") {
    auto run = run_cli({fixture_path("clean.ttl"), "--offline"});
    CHECK(run.exit_code == 0);
}

TEST_CASE("analyze with findings exits 1 and can filter to one issue") {
    auto run = run_cli({"analyze", fixture_path("bad.nt"), "--offline", "--issues",
                        "undocumented_concepts", "--output", "json"});
    CHECK(run.exit_code == 1);
    auto j = nlohmann::json::parse(run.out);
    REQUIRE(j["issues"].size() == 1);
    CHECK(j["issues"][0]["id"] == "undocumented_concepts");
    CHECK(j["issues"][0]["count"] == 3);
}

TEST_CASE("issue filtering never changes an included check's result") {
    auto full = run_cli({"analyze", fixture_path("bad.nt"), "--offline", "--output", "json",
                         "--deterministic"});
    auto filtered = run_cli({"analyze", fixture_path("bad.nt"), "--offline", "--output", "json",
                             "--deterministic", "--issues",
                             "undocumented_concepts,orphan_concepts"});
    auto jf = nlohmann::json::parse(full.out);
    auto js = nlohmann::json::parse(filtered.out);
    REQUIRE(js["issues"].size() == 2);
    for (const auto& filtered_issue : js["issues"]) {
        bool matched = false;
        for (const auto& full_issue : jf["issues"]) {
            if (full_issue["id"] == filtered_issue["id"]) {
                CHECK(full_issue == filtered_issue);
                matched = true;
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("exclude-issues removes a section") {
    auto run = run_cli({"analyze", fixture_path("bad.nt"), "--offline", "--output", "json",
                        "--exclude-issues", "undocumented_concepts"});
    auto j = nlohmann::json::parse(run.out);
    CHECK(j["issues"].size() == 14);
    for (const auto& issue : j["issues"]) CHECK(issue["id"] != "undocumented_concepts");
}

TEST_CASE("deterministic offline output is byte-identical across runs") {
    std::vector<std::string> args{"analyze", fixture_path("clean.ttl"), "--offline",
                                  "--deterministic", "--output", "json"};
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.out.find("timestamp") == std::string::npos);

    args.back() = "text";
    auto text1 = run_cli(args);
    auto text2 = run_cli(args);
    CHECK(text1.out == text2.out);
}

TEST_CASE("stats prints the five statistics lines") {
    auto run = run_cli({"stats", fixture_path("bad.nt")});
    CHECK(run.exit_code == 0);
    CHECK(run.out ==
          "concepts: 3\n"
          "authoritative concepts: 3\n"
          "concept labels: 3\n"
          "semantic relations: 1\n"
          "concept schemes: 0\n");
}

TEST_CASE("issues lists the fifteen ids") {
    auto run = run_cli({"issues"});
    CHECK(run.exit_code == 0);
    std::size_t lines = 0;
    for (char c : run.out)
        if (c == '\n') ++lines;
    CHECK(lines == 15);
    CHECK(run.out.find("omitted_invalid_language_tags:") != std::string::npos);
    CHECK(run.out.find("undefined_skos_resources:") != std::string::npos);
}

TEST_CASE("multiple inputs merge before analysis") {
    auto partial = run_cli({"analyze", fixture_path("merge_concepts.ttl"), "--offline",
                            "--issues", "missing_outlinks", "--output", "json"});
    auto jp = nlohmann::json::parse(partial.out);
    CHECK(jp["issues"][0]["count"] == 3);

    auto merged = run_cli({"analyze", fixture_path("merge_concepts.ttl"),
                           fixture_path("merge_links.ttl"), "--offline", "--issues",
                           "missing_outlinks", "--output", "json"});
    auto jm = nlohmann::json::parse(merged.out);
    CHECK(jm["issues"][0]["count"] == 0);
    CHECK(merged.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"analyze"}).exit_code == 2);                         // missing inputs
    CHECK(run_cli({"analyze", "x.ttl", "--no-such-flag"}).exit_code == 2);
    CHECK(run_cli({"analyze", fixture_path("clean.ttl"), "--offline", "--issues",
                   "not_an_issue"})
              .exit_code == 2);
    CHECK(run_cli({"analyze", fixture_path("clean.ttl"), "--offline", "--threshold", "0"})
              .exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
}

TEST_CASE("strict mode turns malformed input into exit 2") {
    auto lenient = run_cli({"analyze", fixture_path("lenient_5lines.nt"), "--offline"});
    CHECK(lenient.exit_code != 2);
    CHECK(lenient.err.find("malformed") != std::string::npos);

    auto strict =
        run_cli({"analyze", fixture_path("lenient_5lines.nt"), "--offline", "--strict"});
    CHECK(strict.exit_code == 2);
}

TEST_CASE("missing files exit 3") {
    CHECK(run_cli({"analyze", "/no/such/file.ttl", "--offline"}).exit_code == 3);
}

TEST_CASE("format override handles extension-less stdin-style names") {
    CHECK(run_cli({"analyze", fixture_path("bad.nt"), "--offline", "--format", "nt"}).exit_code ==
          1);
    // unknown extension without an override is a usage error
    CHECK(run_cli({"analyze", "/etc/hostname", "--offline"}).exit_code == 2);
}

TEST_CASE("explicit namespace changes authoritative counting") {
    auto run = run_cli({"stats", fixture_path("clean.ttl"), "--namespace",
                        "http://partner.example.net/r/"});
    CHECK(run.out.find("authoritative concepts: 3") != std::string::npos);
    CHECK(run.out.find("concepts: 6") != std::string::npos);
}

TEST_CASE("the endpoint environment variable backs --sparql-endpoint") {
    setenv("SKOSLINT_SPARQL_ENDPOINT", "http://127.0.0.1:1/sparql", 1);
    auto run = run_cli({"analyze", fixture_path("bad.nt"), "--issues", "missing_inlinks",
                        "--output", "json", "--timeout", "0.3"});
    unsetenv("SKOSLINT_SPARQL_ENDPOINT");
    auto j = nlohmann::json::parse(run.out);
    // endpoint taken from the environment, found unreachable, check skipped
    REQUIRE(j["issues"].size() == 1);
    CHECK(j["issues"][0].contains("skipped_reason"));
    std::string reason = j["issues"][0]["skipped_reason"];
    CHECK(reason.find("unreachable") != std::string::npos);
}

TEST_CASE("help and version exit 0") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"--version"}).exit_code == 0);
    auto sub_help = run_cli({"analyze", "--help"});
    CHECK(sub_help.exit_code == 0);
    CHECK(sub_help.out.find("--offline") != std::string::npos);
}
