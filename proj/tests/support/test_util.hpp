#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skoslint/rdf.hpp"

namespace skoslint::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(SKOSLINT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string read_fixture(const std::string& name) { return read_file(fixture_path(name)); }

// Graph equality up to blank node relabeling. Ground triples must match
// exactly; blank-node assignments are found by backtracking (test graphs
// keep blank counts small).
inline bool isomorphic(const rdf::Graph& a, const rdf::Graph& b) {
    using rdf::Term;
    using rdf::Triple;
    if (a.size() != b.size()) return false;

    auto is_ground = [](const Triple& t) {
        return !rdf::is_blank(t.subject) && !rdf::is_blank(t.object);
    };

    std::vector<Triple> a_blank, b_blank;
    std::size_t ground_matches = 0;
    for (const auto& it : a.triples()) {
        Triple t = a.materialize(it);
        if (is_ground(t)) {
            if (!b.contains(t)) return false;
            ++ground_matches;
        } else {
            a_blank.push_back(std::move(t));
        }
    }
    for (const auto& it : b.triples()) {
        Triple t = b.materialize(it);
        if (!is_ground(t)) b_blank.push_back(std::move(t));
    }
    if (a_blank.size() != b_blank.size()) return false;
    if (a_blank.empty()) return true;

    auto blanks_of = [](const std::vector<Triple>& triples) {
        std::vector<std::string> labels;
        for (const Triple& t : triples) {
            if (rdf::is_blank(t.subject)) labels.push_back(std::get<rdf::BlankNode>(t.subject).label);
            if (rdf::is_blank(t.object)) labels.push_back(std::get<rdf::BlankNode>(t.object).label);
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        return labels;
    };
    std::vector<std::string> a_labels = blanks_of(a_blank);
    std::vector<std::string> b_labels = blanks_of(b_blank);
    if (a_labels.size() != b_labels.size()) return false;

    std::map<std::string, std::string> assignment;
    std::vector<bool> used(b_labels.size(), false);

    auto rename = [&](const Term& t) -> Term {
        if (!rdf::is_blank(t)) return t;
        return rdf::BlankNode{assignment.at(std::get<rdf::BlankNode>(t).label)};
    };

    auto all_triples_match = [&]() {
        for (const Triple& t : a_blank) {
            if (!b.contains(Triple{rename(t.subject), t.predicate, rename(t.object)}))
                return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == a_labels.size()) return all_triples_match();
        for (std::size_t j = 0; j < b_labels.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            assignment[a_labels[i]] = b_labels[j];
            if (assign(i + 1)) return true;
            used[j] = false;
            assignment.erase(a_labels[i]);
        }
        return false;
    };
    return assign(0);
}

}  // namespace skoslint::testing
