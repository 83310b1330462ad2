#include "skoslint/checks_structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace skoslint::checks {

using rdf::IdTriple;
using rdf::TermId;
using skos::Vocabulary;

namespace {

std::string id_string(const Vocabulary& v, TermId id) {
    const rdf::Term& t = v.pool()[id];
    if (rdf::is_iri(t)) return rdf::as_iri(t).value;
    return rdf::to_ntriples(t);
}

std::unordered_set<TermId> non_orphan_set(const Vocabulary& v) {
    std::unordered_set<TermId> linked;
    for (const IdTriple& t : v.semantic_relations()) {
        if (t.s == t.o) continue;
        linked.insert(t.s);
        linked.insert(t.o);
    }
    return linked;
}

// Entailed skos:broader adjacency between concepts.
std::unordered_map<TermId, std::vector<TermId>> broader_adjacency(const Vocabulary& v) {
    std::unordered_map<TermId, std::vector<TermId>> adj;
    v.entailed().scan(std::nullopt, v.terms().broader, std::nullopt, [&](IdTriple t) {
        if (v.is_concept(t.s) && v.is_concept(t.o)) adj[t.s].push_back(t.o);
    });
    return adj;
}

struct UnionFind {
    std::unordered_map<TermId, TermId> parent;

    TermId find(TermId x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        TermId root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            TermId next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }

    void unite(TermId a, TermId b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::string> find_orphan_concepts(const Vocabulary& v) {
    std::unordered_set<TermId> linked = non_orphan_set(v);
    std::vector<std::string> orphans;
    for (TermId c : v.concepts()) {
        if (!linked.count(c)) orphans.push_back(id_string(v, c));
    }
    std::sort(orphans.begin(), orphans.end());
    return orphans;
}

ComponentReport find_components(const Vocabulary& v) {
    UnionFind uf;
    for (const IdTriple& t : v.semantic_relations()) {
        if (t.s != t.o) uf.unite(t.s, t.o);
    }
    std::unordered_map<TermId, std::vector<std::string>> groups;
    for (TermId c : v.concepts()) {
        if (uf.parent.count(c)) groups[uf.find(c)].push_back(id_string(v, c));
    }
    ComponentReport report;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        report.components.push_back(std::move(members));
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    return report;
}

std::vector<HierarchyCycle> find_hierarchy_cycles(const Vocabulary& v) {
    auto adj = broader_adjacency(v);

    // Iterative Tarjan SCC; recursion depth is unbounded on deep chains.
    std::unordered_map<TermId, std::uint32_t> index, lowlink;
    std::unordered_set<TermId> on_stack;
    std::vector<TermId> stack;
    std::uint32_t next_index = 0;
    std::vector<std::vector<TermId>> sccs;

    struct Frame {
        TermId node;
        std::size_t edge = 0;
    };

    std::vector<TermId> nodes;
    nodes.reserve(adj.size());
    for (const auto& [n, _] : adj) nodes.push_back(n);

    for (TermId start : nodes) {
        if (index.count(start)) continue;
        std::vector<Frame> frames{{start}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack.insert(start);
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto it = adj.find(f.node);
            bool descended = false;
            while (it != adj.end() && f.edge < it->second.size()) {
                TermId next = it->second[f.edge++];
                auto idx = index.find(next);
                if (idx == index.end()) {
                    index[next] = lowlink[next] = next_index++;
                    stack.push_back(next);
                    on_stack.insert(next);
                    frames.push_back({next});
                    descended = true;
                    break;
                }
                if (on_stack.count(next))
                    lowlink[f.node] = std::min(lowlink[f.node], idx->second);
            }
            if (descended) continue;
            if (lowlink[f.node] == index[f.node]) {
                std::vector<TermId> scc;
                while (true) {
                    TermId n = stack.back();
                    stack.pop_back();
                    on_stack.erase(n);
                    scc.push_back(n);
                    if (n == f.node) break;
                }
                if (scc.size() >= 2) sccs.push_back(std::move(scc));
            }
            TermId finished = f.node;
            frames.pop_back();
            if (!frames.empty())
                lowlink[frames.back().node] =
                    std::min(lowlink[frames.back().node], lowlink[finished]);
        }
    }

    std::vector<HierarchyCycle> cycles;
    for (auto& scc : sccs) {
        HierarchyCycle c;
        for (TermId n : scc) c.concepts.push_back(id_string(v, n));
        std::sort(c.concepts.begin(), c.concepts.end());
        cycles.push_back(std::move(c));
    }
    for (const auto& [node, targets] : adj) {
        if (std::find(targets.begin(), targets.end(), node) != targets.end())
            cycles.push_back({{id_string(v, node)}});
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const HierarchyCycle& a, const HierarchyCycle& b) {
                  return a.concepts < b.concepts;
              });
    return cycles;
}

std::vector<std::pair<std::string, std::string>> find_valueless_associative_relations(
    const Vocabulary& v) {
    const skos::Terms& T = v.terms();

    std::unordered_map<TermId, std::unordered_set<TermId>> parents, children;
    v.entailed().scan(std::nullopt, T.broader, std::nullopt, [&](IdTriple t) {
        if (v.is_concept(t.s) && v.is_concept(t.o)) parents[t.s].insert(t.o);
    });
    v.entailed().scan(std::nullopt, T.narrower, std::nullopt, [&](IdTriple t) {
        if (v.is_concept(t.s) && v.is_concept(t.o)) children[t.s].insert(t.o);
    });

    auto share = [](const std::unordered_map<TermId, std::unordered_set<TermId>>& sets, TermId a,
                    TermId b) {
        auto ia = sets.find(a);
        auto ib = sets.find(b);
        if (ia == sets.end() || ib == sets.end()) return false;
        const auto& small = ia->second.size() <= ib->second.size() ? ia->second : ib->second;
        const auto& large = ia->second.size() <= ib->second.size() ? ib->second : ia->second;
        for (TermId x : small) {
            if (large.count(x)) return true;
        }
        return false;
    };

    std::set<std::pair<std::string, std::string>> pairs;
    v.entailed().scan(std::nullopt, T.related, std::nullopt, [&](IdTriple t) {
        if (t.s == t.o || !v.is_concept(t.s) || !v.is_concept(t.o)) return;
        if (!share(parents, t.s, t.o) && !share(children, t.s, t.o)) return;
        std::string a = id_string(v, t.s);
        std::string b = id_string(v, t.o);
        if (b < a) std::swap(a, b);
        pairs.emplace(std::move(a), std::move(b));
    });
    return {pairs.begin(), pairs.end()};
}

std::vector<std::pair<std::string, std::string>> find_solely_transitive_pairs(
    const Vocabulary& v) {
    const skos::Terms& T = v.terms();

    // Chain edges from asserted broader/narrower only.
    std::unordered_map<TermId, std::vector<TermId>> chain;
    v.asserted().scan(std::nullopt, T.broader, std::nullopt,
                      [&](IdTriple t) { chain[t.s].push_back(t.o); });
    v.asserted().scan(std::nullopt, T.narrower, std::nullopt,
                      [&](IdTriple t) { chain[t.o].push_back(t.s); });

    auto reachable = [&](TermId from, TermId to) {
        std::unordered_set<TermId> seen;
        std::vector<TermId> todo{from};
        while (!todo.empty()) {
            TermId n = todo.back();
            todo.pop_back();
            auto it = chain.find(n);
            if (it == chain.end()) continue;
            for (TermId next : it->second) {
                if (next == to) return true;
                if (seen.insert(next).second) todo.push_back(next);
            }
        }
        return false;
    };

    std::set<std::pair<TermId, TermId>> candidates;
    v.asserted().scan(std::nullopt, T.broader_transitive, std::nullopt,
                      [&](IdTriple t) { candidates.emplace(t.s, t.o); });
    v.asserted().scan(std::nullopt, T.narrower_transitive, std::nullopt,
                      [&](IdTriple t) { candidates.emplace(t.o, t.s); });

    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& [a, b] : candidates) {
        if (!reachable(a, b)) pairs.emplace(id_string(v, a), id_string(v, b));
    }
    return {pairs.begin(), pairs.end()};
}

std::vector<std::string> find_schemes_without_top_concepts(const Vocabulary& v) {
    const skos::Terms& T = v.terms();
    std::vector<std::string> result;
    for (TermId s : v.concept_schemes()) {
        bool has_top = false;
        v.entailed().scan(s, T.has_top_concept, std::nullopt,
                          [&](IdTriple) { has_top = true; });
        if (!has_top) {
            v.entailed().scan(std::nullopt, T.top_concept_of, s,
                              [&](IdTriple) { has_top = true; });
        }
        if (!has_top) result.push_back(id_string(v, s));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::string> find_top_concepts_with_broader(const Vocabulary& v) {
    const skos::Terms& T = v.terms();
    std::unordered_set<TermId> top_concepts;
    v.entailed().scan(std::nullopt, T.has_top_concept, std::nullopt, [&](IdTriple t) {
        if (rdf::is_resource(v.pool()[t.o])) top_concepts.insert(t.o);
    });
    v.entailed().scan(std::nullopt, T.top_concept_of, std::nullopt,
                      [&](IdTriple t) { top_concepts.insert(t.s); });

    std::vector<std::string> result;
    for (TermId t : top_concepts) {
        bool has_broader = false;
        v.entailed().scan(t, T.broader, std::nullopt, [&](IdTriple) { has_broader = true; });
        if (has_broader) result.push_back(id_string(v, t));
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace skoslint::checks
