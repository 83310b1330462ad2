#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "skoslint/vocabulary.hpp"

namespace skoslint::checks {

struct NetworkConfig {
    std::chrono::milliseconds timeout{30000};
    std::size_t max_redirects = 10;
    std::size_t max_parallel_requests = 8;
    double subsample_rate = 1.0;  // in (0,1]
    std::uint64_t random_seed = 42;
    std::optional<std::string> sparql_endpoint;
    std::chrono::milliseconds host_delay{500};
    bool accept_any_2xx = false;  // default: only 200 counts as healthy
};

enum class ProbeError { timeout, connection_failed, too_many_redirects, non_http_scheme };

std::string to_string(ProbeError e);

struct LinkProbeResult {
    std::string uri;
    std::optional<int> final_status;
    std::vector<std::string> redirect_chain;
    std::optional<ProbeError> error;

    bool broken(bool accept_any_2xx) const {
        if (error) return true;
        if (accept_any_2xx) return *final_status < 200 || *final_status >= 300;
        return *final_status != 200;
    }
};

// Dereferences one URI: HEAD first, GET when the server rejects HEAD,
// following redirects up to max_redirects.
LinkProbeResult probe_uri(const std::string& uri, const NetworkConfig& cfg);

struct ProbeReport {
    std::vector<LinkProbeResult> results;  // sorted by URI; one per probed URI
    std::vector<std::string> broken;       // sorted
    std::size_t sampled = 0;
    std::size_t candidate_total = 0;
    std::size_t extrapolated_total = 0;
    bool extrapolated = false;
};

// Probes a deterministic subsample of the dereferenceable HTTP(S) IRIs
// in the vocabulary (schema-namespace IRIs excluded), with at most
// max_parallel_requests in flight and a per-host politeness delay.
ProbeReport probe_links(const skos::Vocabulary& v, const NetworkConfig& cfg);

struct InlinkReport {
    std::vector<std::string> affected;  // sorted sampled concepts without in-links
    std::size_t sampled = 0;
    std::size_t query_errors = 0;
    std::size_t extrapolated_total = 0;
    bool extrapolated = false;
};

// Asks the configured SPARQL endpoint for { ?s ?p <concept> } over a
// deterministic subsample of the authoritative concepts. Throws
// EndpointUnreachableError when no query gets through.
InlinkReport find_missing_inlinks(const skos::Vocabulary& v, const NetworkConfig& cfg);

// Authoritative concepts not linked with any non-authoritative resource
// outside the well-known schema namespaces. Offline.
std::vector<std::string> find_missing_outlinks(const skos::Vocabulary& v);

// IRIs in the SKOS namespace that are deprecated or not defined by the
// current SKOS vocabulary. Offline.
std::vector<std::string> find_undefined_skos_resources(const skos::Vocabulary& v);
std::vector<std::string> find_undefined_skos_resources(
    const skos::Vocabulary& v, const std::unordered_set<std::string>& current_terms,
    const std::unordered_set<std::string>& deprecated_terms);

// One IRI per line; lines starting with '#' are comments.
std::unordered_set<std::string> parse_iri_list(std::string_view text);

// Bundled term lists.
const std::unordered_set<std::string>& skos_current_terms();
const std::unordered_set<std::string>& skos_deprecated_terms();

}  // namespace skoslint::checks
