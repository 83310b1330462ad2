#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skoslint/checks_linkeddata.hpp"
#include "skoslint/errors.hpp"
#include "skoslint/sampling.hpp"
#include "skoslint/rdf.hpp"
#include "support/stub_http.hpp"

using namespace skoslint;
using namespace skoslint::checks;
using skoslint::testing::StubServer;
using skos::Vocabulary;

namespace {

// Vocabulary whose concept IRIs live on the stub server.
Vocabulary stub_vocabulary(const StubServer& server, std::size_t concepts) {
    rdf::Graph g;
    rdf::Iri type{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};
    rdf::Iri concept_class{"http://www.w3.org/2004/02/skos/core#Concept"};
    for (std::size_t i = 0; i < concepts; ++i) {
        g.insert(rdf::Triple{rdf::Iri{server.url("/ns/c" + std::to_string(i))}, type,
                             concept_class});
    }
    return Vocabulary::build(std::move(g), server.base_url() + "/ns/");
}

NetworkConfig fast_config() {
    NetworkConfig cfg;
    cfg.timeout = std::chrono::milliseconds(400);
    cfg.host_delay = std::chrono::milliseconds(0);
    cfg.max_parallel_requests = 4;
    return cfg;
}

}  // namespace

TEST_CASE("probe_uri: plain 200") {
    StubServer server;
    auto result = probe_uri(server.url("/ok"), fast_config());
    REQUIRE(result.final_status.has_value());
    CHECK(*result.final_status == 200);
    CHECK(result.redirect_chain.empty());
    CHECK_FALSE(result.broken(false));
}

TEST_CASE("probe_uri: redirect chain is followed and recorded") {
    StubServer server;
    server.script("/moved", {301, server.url("/target")});
    server.script("/target", {200});
    auto result = probe_uri(server.url("/moved"), fast_config());
    REQUIRE(result.final_status.has_value());
    CHECK(*result.final_status == 200);
    REQUIRE(result.redirect_chain.size() == 1);
    CHECK(result.redirect_chain[0] == server.url("/target"));
    CHECK_FALSE(result.broken(false));
}

TEST_CASE("probe_uri: relative Location header") {
    StubServer server;
    server.script("/moved", {302, "/rel-target"});
    server.script("/rel-target", {200});
    auto result = probe_uri(server.url("/moved"), fast_config());
    REQUIRE(result.final_status.has_value());
    CHECK(*result.final_status == 200);
}

TEST_CASE("probe_uri: 404 is broken") {
    StubServer server;
    server.script("/gone", {404});
    auto result = probe_uri(server.url("/gone"), fast_config());
    CHECK(result.broken(false));
    CHECK(*result.final_status == 404);
}

TEST_CASE("probe_uri: 204 depends on the 2xx policy") {
    StubServer server;
    server.script("/nocontent", {204});
    auto result = probe_uri(server.url("/nocontent"), fast_config());
    CHECK(result.broken(false));       // literal reading: only 200 is healthy
    CHECK_FALSE(result.broken(true));  // --accept-2xx
}

TEST_CASE("probe_uri: timeout is classified") {
    StubServer server;
    server.script("/slow", {.status = 200, .location = "", .sleep_ms = 1200});
    auto result = probe_uri(server.url("/slow"), fast_config());
    REQUIRE(result.error.has_value());
    CHECK(*result.error == ProbeError::timeout);
}

TEST_CASE("probe_uri: connection refused") {
    auto result = probe_uri("http://127.0.0.1:1/x", fast_config());
    REQUIRE(result.error.has_value());
    CHECK(*result.error == ProbeError::connection_failed);
}

TEST_CASE("probe_uri: redirect loops hit the redirect cap") {
    StubServer server;
    server.script("/a", {301, server.url("/b")});
    server.script("/b", {301, server.url("/a")});
    NetworkConfig cfg = fast_config();
    cfg.max_redirects = 5;
    auto result = probe_uri(server.url("/a"), cfg);
    REQUIRE(result.error.has_value());
    CHECK(*result.error == ProbeError::too_many_redirects);
    CHECK(result.redirect_chain.size() <= cfg.max_redirects);
}

TEST_CASE("probe_uri: non-http scheme") {
    auto result = probe_uri("ftp://ex.org/file", fast_config());
    REQUIRE(result.error.has_value());
    CHECK(*result.error == ProbeError::non_http_scheme);
}

TEST_CASE("probe_uri: HEAD rejected with 405 falls back to GET") {
    StubServer server;
    server.script("/head-hostile", {.status = 200, .location = "", .sleep_ms = 0,
                                    .reject_head = true});
    auto result = probe_uri(server.url("/head-hostile"), fast_config());
    REQUIRE(result.final_status.has_value());
    CHECK(*result.final_status == 200);
}

TEST_CASE("probe_links: scripted statuses at rate 1.0") {
    StubServer server;
    server.script("/ns/c1", {404});
    server.script("/ns/c3", {404});
    server.script("/ns/c5", {301, server.url("/ns/c5-moved")});
    Vocabulary v = stub_vocabulary(server, 10);

    auto report = probe_links(v, fast_config());
    CHECK(report.sampled == 10);
    CHECK(report.results.size() == 10);
    CHECK_FALSE(report.extrapolated);
    REQUIRE(report.broken.size() == 2);
    CHECK(report.broken[0] == server.url("/ns/c1"));
    CHECK(report.broken[1] == server.url("/ns/c3"));
    CHECK(report.extrapolated_total == 2);
    CHECK(std::is_sorted(report.results.begin(), report.results.end(),
                         [](const auto& a, const auto& b) { return a.uri < b.uri; }));
}

TEST_CASE("probe_links: schema-namespace IRIs are not probed") {
    StubServer server;
    rdf::Graph g;
    rdf::Iri type{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};
    rdf::Iri concept_class{"http://www.w3.org/2004/02/skos/core#Concept"};
    g.insert(rdf::Triple{rdf::Iri{server.url("/ns/c0")}, type, concept_class});
    Vocabulary v = Vocabulary::build(std::move(g), server.base_url() + "/ns/");

    auto report = probe_links(v, fast_config());
    CHECK(report.candidate_total == 1);  // the typing IRIs stay out of the probe set
    CHECK(report.results.size() == 1);
}

TEST_CASE("probe_links: seed determinism and the extrapolation identity") {
    StubServer server;
    server.script("/ns/c2", {500});
    server.script("/ns/c7", {404});
    Vocabulary v = stub_vocabulary(server, 12);

    NetworkConfig cfg = fast_config();
    cfg.subsample_rate = 0.5;
    cfg.random_seed = 99;

    auto first = probe_links(v, cfg);
    auto second = probe_links(v, cfg);
    CHECK(first.sampled == 6);
    CHECK(first.broken == second.broken);
    CHECK(first.extrapolated);
    CHECK(first.extrapolated_total == extrapolate_total(first.broken.size(), 0.5));

    cfg.subsample_rate = 1.0;
    auto full = probe_links(v, cfg);
    CHECK_FALSE(full.extrapolated);
    CHECK(full.extrapolated_total == full.broken.size());
    CHECK(full.broken.size() == 2);
}

TEST_CASE("probe_links: the stub never sees more than max_parallel_requests") {
    StubServer server;
    for (int i = 0; i < 12; ++i)
        server.script("/ns/c" + std::to_string(i), {.status = 200, .location = "", .sleep_ms = 60});
    Vocabulary v = stub_vocabulary(server, 12);

    NetworkConfig cfg = fast_config();
    cfg.max_parallel_requests = 3;
    cfg.timeout = std::chrono::milliseconds(5000);
    auto report = probe_links(v, cfg);
    CHECK(report.broken.empty());
    CHECK(server.peak_concurrency() <= 3);
    CHECK(server.peak_concurrency() >= 1);
}

TEST_CASE("find_missing_inlinks: endpoint knowing every concept") {
    StubServer server;
    Vocabulary v = stub_vocabulary(server, 6);
    std::set<std::string> all;
    for (int i = 0; i < 6; ++i) all.insert(server.url("/ns/c" + std::to_string(i)));
    server.set_known_subjects(all);

    NetworkConfig cfg = fast_config();
    cfg.sparql_endpoint = server.sparql_endpoint();
    auto report = find_missing_inlinks(v, cfg);
    CHECK(report.affected.empty());
    CHECK(report.sampled == 6);
    CHECK(report.query_errors == 0);
    CHECK(report.extrapolated_total == 0);
}

TEST_CASE("find_missing_inlinks: endpoint knowing nothing flags every sampled concept") {
    StubServer server;
    Vocabulary v = stub_vocabulary(server, 6);
    NetworkConfig cfg = fast_config();
    cfg.sparql_endpoint = server.sparql_endpoint();
    auto report = find_missing_inlinks(v, cfg);
    CHECK(report.affected.size() == 6);
    CHECK(report.extrapolated_total == 6);
}

TEST_CASE("find_missing_inlinks: seeded subsample with known subset extrapolates") {
    StubServer server;
    Vocabulary v = stub_vocabulary(server, 10);
    server.set_known_subjects({server.url("/ns/c0"), server.url("/ns/c4")});

    NetworkConfig cfg = fast_config();
    cfg.sparql_endpoint = server.sparql_endpoint();
    cfg.subsample_rate = 0.5;
    cfg.random_seed = 7;

    auto first = find_missing_inlinks(v, cfg);
    auto second = find_missing_inlinks(v, cfg);
    CHECK(first.affected == second.affected);
    CHECK(first.sampled == 5);
    CHECK(first.extrapolated);
    CHECK(first.extrapolated_total == extrapolate_total(first.affected.size(), 0.5));
    CHECK(first.extrapolated_total == 2 * first.affected.size());
}

TEST_CASE("find_missing_inlinks: unreachable endpoint aborts the check") {
    StubServer server;
    Vocabulary v = stub_vocabulary(server, 3);
    NetworkConfig cfg = fast_config();
    cfg.sparql_endpoint = "http://127.0.0.1:1/sparql";
    CHECK_THROWS_AS(find_missing_inlinks(v, cfg), EndpointUnreachableError);
}

TEST_CASE("find_missing_inlinks: per-concept errors shrink the extrapolation base") {
    StubServer server;
    Vocabulary v = stub_vocabulary(server, 4);
    // c0 known, c1 errors, c2/c3 have no in-links
    server.set_known_subjects({server.url("/ns/c0")});
    server.set_sparql_errors({server.url("/ns/c1")});
    NetworkConfig cfg = fast_config();
    cfg.sparql_endpoint = server.sparql_endpoint();

    auto report = find_missing_inlinks(v, cfg);
    CHECK(report.sampled == 4);
    CHECK(report.query_errors == 1);
    REQUIRE(report.affected.size() == 2);
    // effective rate = 3 successful / 4 concepts; round(2 / 0.75) = 3
    CHECK(report.extrapolated_total == 3);
}

TEST_CASE("find_missing_inlinks: every query failing means the endpoint is unusable") {
    StubServer server;
    Vocabulary v = stub_vocabulary(server, 4);
    server.set_sparql_malformed(true);
    NetworkConfig cfg = fast_config();
    cfg.sparql_endpoint = server.sparql_endpoint();
    CHECK_THROWS_AS(find_missing_inlinks(v, cfg), EndpointUnreachableError);
}
