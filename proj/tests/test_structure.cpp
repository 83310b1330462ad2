#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "skoslint/checks_structure.hpp"
#include "skoslint/turtle.hpp"
#include "support/test_util.hpp"

using namespace skoslint;
using namespace skoslint::checks;
using rdf::Graph;
using rdf::Iri;
using rdf::Triple;
using skos::Vocabulary;

namespace {

constexpr const char* kNs = "http://ex.org/v/";

Iri concept_iri(std::size_t i) { return Iri{kNs + std::string("c") + std::to_string(i)}; }
Iri skos_iri(const std::string& local) {
    return Iri{"http://www.w3.org/2004/02/skos/core#" + local};
}

Vocabulary vocab_from_edges(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                            const std::string& property, std::size_t isolated = 0) {
    Graph g;
    std::size_t max_node = 0;
    for (auto [a, b] : edges) {
        g.insert(Triple{concept_iri(a), skos_iri(property), concept_iri(b)});
        max_node = std::max({max_node, a, b});
    }
    for (std::size_t i = 0; i <= max_node + isolated; ++i) {
        g.insert(Triple{concept_iri(i), Iri{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"},
                        skos_iri("Concept")});
    }
    return Vocabulary::build(std::move(g), std::string(kNs));
}

std::string cid(std::size_t i) { return kNs + std::string("c") + std::to_string(i); }

}  // namespace

TEST_CASE("orphans: a vocabulary with no semantic relations is all orphans") {
    Vocabulary v = vocab_from_edges({}, "broader", 5);
    CHECK(find_orphan_concepts(v).size() == v.concepts().size());
    CHECK(find_components(v).components.empty());
}

TEST_CASE("orphans: one broader edge rescues both ends") {
    Vocabulary v = vocab_from_edges({{0, 1}}, "broader");
    CHECK(find_orphan_concepts(v).empty());
}

TEST_CASE("orphans: reflexive relations convey no context") {
    Vocabulary v = vocab_from_edges({{0, 0}, {1, 2}}, "related");
    auto orphans = find_orphan_concepts(v);
    REQUIRE(orphans.size() == 1);
    CHECK(orphans[0] == cid(0));
}

TEST_CASE("orphans: 10 concepts with 3 isolated") {
    Vocabulary v = vocab_from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, "broader", 3);
    CHECK(v.concepts().size() == 10);
    CHECK(find_orphan_concepts(v).size() == 3);
}

TEST_CASE("components: single chain is one component") {
    Vocabulary v = vocab_from_edges({{0, 1}, {1, 2}}, "broader");
    auto report = find_components(v);
    REQUIRE(report.components.size() == 1);
    CHECK(report.components[0] == std::vector<std::string>{cid(0), cid(1), cid(2)});
}

TEST_CASE("components: cluster sizes come out sorted descending") {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t next = 0;
    auto chain = [&](std::size_t size) {
        for (std::size_t i = 1; i < size; ++i) edges.push_back({next + i - 1, next + i});
        next += size;
    };
    chain(4);
    chain(5);
    chain(6);
    chain(20);
    Vocabulary v = vocab_from_edges(edges, "related");
    auto report = find_components(v);
    REQUIRE(report.components.size() == 4);
    CHECK(report.components[0].size() == 20);
    CHECK(report.components[1].size() == 6);
    CHECK(report.components[2].size() == 5);
    CHECK(report.components[3].size() == 4);
}

TEST_CASE("components: mixed relation kinds connect across directions") {
    Graph g;
    g.insert(Triple{concept_iri(0), skos_iri("broader"), concept_iri(1)});
    g.insert(Triple{concept_iri(2), skos_iri("narrower"), concept_iri(1)});
    g.insert(Triple{concept_iri(2), skos_iri("exactMatch"), concept_iri(3)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    auto report = find_components(v);
    REQUIRE(report.components.size() == 1);
    CHECK(report.components[0].size() == 4);
}

TEST_CASE("cycles: reflexive broader is a length-1 cycle") {
    Vocabulary v = vocab_from_edges({{0, 0}}, "broader");
    auto cycles = find_hierarchy_cycles(v);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].concepts == std::vector<std::string>{cid(0)});
}

TEST_CASE("cycles: two-node cycle") {
    Vocabulary v = vocab_from_edges({{0, 1}, {1, 0}}, "broader");
    auto cycles = find_hierarchy_cycles(v);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].concepts == std::vector<std::string>{cid(0), cid(1)});
}

TEST_CASE("cycles: narrower assertions are normalized through entailment") {
    // c1 narrower c0 means c0 broader c1; with c0 narrower c1 both directions exist.
    Vocabulary v = vocab_from_edges({{1, 0}, {0, 1}}, "narrower");
    auto cycles = find_hierarchy_cycles(v);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].concepts.size() == 2);
}

namespace {

std::set<std::string> brute_force_cycle_members(
    std::size_t nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
    std::set<std::string> on_cycle;
    for (std::size_t start = 0; start < nodes; ++start) {
        // DFS over at least one edge back to start
        std::vector<std::size_t> stack;
        std::set<std::size_t> seen;
        for (auto [a, b] : edges) {
            if (a == start && (b == start || !seen.count(b))) stack.push_back(b);
        }
        bool found = false;
        while (!stack.empty() && !found) {
            std::size_t n = stack.back();
            stack.pop_back();
            if (n == start) {
                found = true;
                break;
            }
            if (!seen.insert(n).second) continue;
            for (auto [a, b] : edges) {
                if (a == n) stack.push_back(b);
            }
        }
        if (found) on_cycle.insert(cid(start));
    }
    return on_cycle;
}

}  // namespace

TEST_CASE("cycles: 12-node fixture with two 3-cycles and a DAG remainder") {
    std::set<std::pair<std::size_t, std::size_t>> edges = {
        {0, 1}, {1, 2}, {2, 0},              // first cycle
        {3, 4}, {4, 5}, {5, 3},              // second cycle
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {6, 11},  // DAG
    };
    Vocabulary v =
        vocab_from_edges({edges.begin(), edges.end()}, "broader");
    auto cycles = find_hierarchy_cycles(v);
    REQUIRE(cycles.size() == 2);
    std::set<std::string> reported;
    for (const auto& c : cycles) reported.insert(c.concepts.begin(), c.concepts.end());
    CHECK(reported == brute_force_cycle_members(12, edges));
}

TEST_CASE("property: cycle members match brute force on random digraphs") {
    std::mt19937_64 rng(271828);
    for (int round = 0; round < 40; ++round) {
        std::size_t nodes = 2 + rng() % 11;
        std::set<std::pair<std::size_t, std::size_t>> edges;
        std::size_t n_edges = rng() % (nodes * 2);
        for (std::size_t i = 0; i < n_edges; ++i) edges.insert({rng() % nodes, rng() % nodes});

        Vocabulary v = vocab_from_edges({edges.begin(), edges.end()}, "broader",
                                        nodes);  // pad so every node exists
        auto cycles = find_hierarchy_cycles(v);
        std::set<std::string> reported;
        for (const auto& c : cycles) reported.insert(c.concepts.begin(), c.concepts.end());
        CHECK(reported == brute_force_cycle_members(nodes, edges));
    }
}

TEST_CASE("valueless: related siblings under a shared parent") {
    Graph g;
    g.insert(Triple{concept_iri(1), skos_iri("broader"), concept_iri(0)});
    g.insert(Triple{concept_iri(2), skos_iri("broader"), concept_iri(0)});
    g.insert(Triple{concept_iri(1), skos_iri("related"), concept_iri(2)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    auto pairs = find_valueless_associative_relations(v);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<std::string, std::string>{cid(1), cid(2)});
}

TEST_CASE("valueless: related without shared parent or child is fine") {
    Graph g;
    g.insert(Triple{concept_iri(1), skos_iri("broader"), concept_iri(0)});
    g.insert(Triple{concept_iri(2), skos_iri("broader"), concept_iri(3)});
    g.insert(Triple{concept_iri(1), skos_iri("related"), concept_iri(2)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    CHECK(find_valueless_associative_relations(v).empty());
}

TEST_CASE("valueless: shared child also triggers") {
    Graph g;
    g.insert(Triple{concept_iri(2), skos_iri("broader"), concept_iri(0)});
    g.insert(Triple{concept_iri(2), skos_iri("broader"), concept_iri(1)});
    g.insert(Triple{concept_iri(0), skos_iri("related"), concept_iri(1)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    CHECK(find_valueless_associative_relations(v).size() == 1);
}

TEST_CASE("valueless: 3 sibling pairs related, 2 non-sibling pairs related") {
    Graph g;
    auto sibling_pair = [&](std::size_t parent, std::size_t a, std::size_t b) {
        g.insert(Triple{concept_iri(a), skos_iri("broader"), concept_iri(parent)});
        g.insert(Triple{concept_iri(b), skos_iri("broader"), concept_iri(parent)});
        g.insert(Triple{concept_iri(a), skos_iri("related"), concept_iri(b)});
    };
    sibling_pair(0, 1, 2);
    sibling_pair(3, 4, 5);
    sibling_pair(6, 7, 8);
    g.insert(Triple{concept_iri(1), skos_iri("related"), concept_iri(4)});
    g.insert(Triple{concept_iri(7), skos_iri("related"), concept_iri(0)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    CHECK(find_valueless_associative_relations(v).size() == 3);
}

TEST_CASE("property: valueless result is invariant under broader/narrower re-expression") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 20; ++round) {
        std::size_t nodes = 3 + rng() % 8;
        Graph broader_version, narrower_version;
        for (std::size_t i = 0; i < nodes; ++i) {
            std::size_t parent = rng() % nodes;
            if (parent == i) continue;
            broader_version.insert(Triple{concept_iri(i), skos_iri("broader"), concept_iri(parent)});
            narrower_version.insert(
                Triple{concept_iri(parent), skos_iri("narrower"), concept_iri(i)});
        }
        for (int e = 0; e < 4; ++e) {
            std::size_t a = rng() % nodes, b = rng() % nodes;
            broader_version.insert(Triple{concept_iri(a), skos_iri("related"), concept_iri(b)});
            narrower_version.insert(Triple{concept_iri(b), skos_iri("related"), concept_iri(a)});
        }
        Vocabulary v1 = Vocabulary::build(std::move(broader_version), std::string(kNs));
        Vocabulary v2 = Vocabulary::build(std::move(narrower_version), std::string(kNs));
        CHECK(find_valueless_associative_relations(v1) ==
              find_valueless_associative_relations(v2));
    }
}

TEST_CASE("solely transitive: a lone broaderTransitive assertion is flagged") {
    Vocabulary v = vocab_from_edges({{0, 1}}, "broaderTransitive");
    auto pairs = find_solely_transitive_pairs(v);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<std::string, std::string>{cid(0), cid(1)});
}

TEST_CASE("solely transitive: a direct broader edge justifies the assertion") {
    Graph g;
    g.insert(Triple{concept_iri(0), skos_iri("broader"), concept_iri(1)});
    g.insert(Triple{concept_iri(0), skos_iri("broaderTransitive"), concept_iri(1)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    CHECK(find_solely_transitive_pairs(v).empty());
}

TEST_CASE("solely transitive: chains of broader justify the assertion") {
    Graph g;
    g.insert(Triple{concept_iri(0), skos_iri("broader"), concept_iri(1)});
    g.insert(Triple{concept_iri(1), skos_iri("broader"), concept_iri(2)});
    g.insert(Triple{concept_iri(0), skos_iri("broaderTransitive"), concept_iri(2)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    CHECK(find_solely_transitive_pairs(v).empty());
}

TEST_CASE("solely transitive: narrowerTransitive is normalized before chain checking") {
    // (a narrowerTransitive b) claims b below a; an asserted narrower chain covers it.
    Graph g;
    g.insert(Triple{concept_iri(0), skos_iri("narrowerTransitive"), concept_iri(1)});
    g.insert(Triple{concept_iri(2), skos_iri("narrowerTransitive"), concept_iri(3)});
    g.insert(Triple{concept_iri(2), skos_iri("narrower"), concept_iri(3)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    auto pairs = find_solely_transitive_pairs(v);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<std::string, std::string>{cid(1), cid(0)});
}

TEST_CASE("property: no transitive assertions means no findings") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 10; ++round) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (int e = 0; e < 15; ++e) edges.push_back({rng() % 8, rng() % 8});
        Vocabulary v = vocab_from_edges(edges, rng() % 2 ? "broader" : "narrower");
        CHECK(find_solely_transitive_pairs(v).empty());
    }
}

TEST_CASE("omitted top concepts: hasTopConcept and topConceptOf both satisfy") {
    Graph g;
    Iri s1{"http://ex.org/v/s1"}, s2{"http://ex.org/v/s2"}, s3{"http://ex.org/v/s3"};
    auto type = Iri{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};
    g.insert(Triple{s1, skos_iri("hasTopConcept"), concept_iri(0)});
    g.insert(Triple{concept_iri(1), skos_iri("topConceptOf"), s2});
    g.insert(Triple{s3, type, skos_iri("ConceptScheme")});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    REQUIRE(v.concept_schemes().size() == 3);
    auto omitted = find_schemes_without_top_concepts(v);
    REQUIRE(omitted.size() == 1);
    CHECK(omitted[0] == "http://ex.org/v/s3");
}

TEST_CASE("top concept with broader is flagged; broadMatch is exempt") {
    Graph g;
    Iri scheme{"http://ex.org/v/scheme"};
    g.insert(Triple{scheme, skos_iri("hasTopConcept"), concept_iri(0)});
    g.insert(Triple{scheme, skos_iri("hasTopConcept"), concept_iri(1)});
    g.insert(Triple{scheme, skos_iri("hasTopConcept"), concept_iri(2)});
    g.insert(Triple{concept_iri(3), skos_iri("topConceptOf"), scheme});
    g.insert(Triple{concept_iri(0), skos_iri("broader"), concept_iri(4)});
    g.insert(Triple{concept_iri(1), skos_iri("broadMatch"), Iri{"http://other.org/x"}});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    auto flagged = find_top_concepts_with_broader(v);
    REQUIRE(flagged.size() == 1);
    CHECK(flagged[0] == cid(0));
}

TEST_CASE("top concept flagged via asserted narrower pointing at it") {
    Graph g;
    Iri scheme{"http://ex.org/v/scheme"};
    g.insert(Triple{scheme, skos_iri("hasTopConcept"), concept_iri(0)});
    g.insert(Triple{concept_iri(1), skos_iri("narrower"), concept_iri(0)});
    Vocabulary v = Vocabulary::build(std::move(g), std::string(kNs));
    CHECK(find_top_concepts_with_broader(v).size() == 1);
}

TEST_CASE("property: components partition the non-orphans and edges stay inside") {
    std::mt19937_64 rng(8080);
    for (int round = 0; round < 15; ++round) {
        std::size_t nodes = 10 + rng() % 191;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::size_t n_edges = rng() % nodes;
        for (std::size_t i = 0; i < n_edges; ++i) {
            std::size_t a = rng() % nodes, b = rng() % nodes;
            if (a != b) edges.push_back({a, b});
        }
        Vocabulary v = vocab_from_edges(edges, "related", nodes);
        auto report = find_components(v);
        auto orphans = find_orphan_concepts(v);

        std::set<std::string> seen;
        std::size_t total = 0;
        std::map<std::string, std::size_t> component_of;
        for (std::size_t i = 0; i < report.components.size(); ++i) {
            CHECK(report.components[i].size() >= 2);
            for (const std::string& m : report.components[i]) {
                CHECK(seen.insert(m).second);  // disjoint
                component_of[m] = i;
                ++total;
            }
        }
        CHECK(total + orphans.size() == v.concepts().size());
        for (const std::string& o : orphans) CHECK_FALSE(seen.count(o));
        for (auto [a, b] : edges) {
            if (a == b) continue;
            CHECK(component_of.at(cid(a)) == component_of.at(cid(b)));
        }
    }
}

TEST_CASE("property: an edge between two orphans moves exactly two of them") {
    Vocabulary before = vocab_from_edges({{0, 1}}, "related", 4);  // c2..c5 isolated
    auto orphans_before = find_orphan_concepts(before);
    auto components_before = find_components(before).components.size();
    REQUIRE(orphans_before.size() == 4);

    Vocabulary after = vocab_from_edges({{0, 1}, {2, 3}}, "related", 2);
    auto orphans_after = find_orphan_concepts(after);
    auto components_after = find_components(after).components.size();
    CHECK(orphans_before.size() - orphans_after.size() == 2);
    CHECK(components_after - components_before == 1);
}
