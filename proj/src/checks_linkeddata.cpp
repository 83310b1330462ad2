#include "skoslint/checks_linkeddata.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "skoslint/embedded/skos_terms_current.hpp"
#include "skoslint/embedded/skos_terms_deprecated.hpp"
#include "skoslint/errors.hpp"
#include "skoslint/language.hpp"
#include "skoslint/sampling.hpp"

namespace skoslint::checks {

using rdf::IdTriple;
using rdf::TermId;
using skos::Vocabulary;

std::string to_string(ProbeError e) {
    switch (e) {
        case ProbeError::timeout: return "timeout";
        case ProbeError::connection_failed: return "connection_failed";
        case ProbeError::too_many_redirects: return "too_many_redirects";
        case ProbeError::non_http_scheme: return "non_http_scheme";
    }
    return "unknown";
}

namespace {

struct UrlParts {
    std::string scheme;
    std::string host;
    int port = 0;
    std::string target;  // path + query
};

std::optional<UrlParts> parse_http_url(const std::string& url) {
    UrlParts parts;
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    parts.scheme = url.substr(0, scheme_end);
    for (char& c : parts.scheme)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (parts.scheme != "http" && parts.scheme != "https") return std::nullopt;

    std::size_t host_start = scheme_end + 3;
    std::size_t host_end = url.find_first_of("/?#", host_start);
    std::string authority = url.substr(
        host_start, host_end == std::string::npos ? std::string::npos : host_end - host_start);
    std::size_t colon = authority.rfind(':');
    if (colon != std::string::npos && colon + 1 < authority.size() &&
        authority.find(']') == std::string::npos) {
        parts.host = authority.substr(0, colon);
        parts.port = std::atoi(authority.c_str() + colon + 1);
    } else {
        parts.host = authority;
        parts.port = parts.scheme == "https" ? 443 : 80;
    }
    if (parts.host.empty()) return std::nullopt;

    if (host_end == std::string::npos || url[host_end] == '#') {
        parts.target = "/";
    } else {
        std::string rest = url.substr(host_end);
        std::size_t frag = rest.find('#');
        if (frag != std::string::npos) rest = rest.substr(0, frag);
        parts.target = rest.empty() || rest[0] == '?' ? "/" + rest : rest;
    }
    return parts;
}

// Serializes requests per host with the configured politeness delay.
class HostThrottle {
public:
    explicit HostThrottle(std::chrono::milliseconds delay) : delay_(delay) {}

    void acquire(const std::string& host) {
        if (delay_.count() <= 0) return;
        std::chrono::steady_clock::time_point ready;
        {
            std::lock_guard lock(mutex_);
            auto now = std::chrono::steady_clock::now();
            auto& next = next_slot_[host];
            ready = std::max(now, next);
            next = ready + delay_;
        }
        std::this_thread::sleep_until(ready);
    }

private:
    std::chrono::milliseconds delay_;
    std::mutex mutex_;
    std::map<std::string, std::chrono::steady_clock::time_point> next_slot_;
};

bool is_redirect(int status) {
    return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

ProbeError classify(httplib::Error e) {
    switch (e) {
        case httplib::Error::ConnectionTimeout: return ProbeError::timeout;
        case httplib::Error::Read:
        case httplib::Error::Write: return ProbeError::timeout;
        default: return ProbeError::connection_failed;
    }
}

httplib::Result request_once(const UrlParts& parts, const NetworkConfig& cfg, bool head) {
    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(cfg.timeout);
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(cfg.timeout) -
                  std::chrono::duration_cast<std::chrono::microseconds>(seconds);
    auto configure = [&](auto& client) {
        client.set_connection_timeout(seconds.count(), micros.count());
        client.set_read_timeout(seconds.count(), micros.count());
        client.set_follow_location(false);
    };
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    if (parts.scheme == "https") {
        httplib::SSLClient client(parts.host, parts.port);
        client.enable_server_certificate_verification(false);
        configure(client);
        return head ? client.Head(parts.target) : client.Get(parts.target);
    }
#endif
    httplib::Client client(parts.host, parts.port);
    configure(client);
    return head ? client.Head(parts.target) : client.Get(parts.target);
}

LinkProbeResult probe_uri_throttled(const std::string& uri, const NetworkConfig& cfg,
                                    HostThrottle* throttle) {
    LinkProbeResult result;
    result.uri = uri;

    std::string current = uri;
    for (std::size_t hops = 0;; ++hops) {
        auto parts = parse_http_url(current);
        if (!parts) {
            result.error = ProbeError::non_http_scheme;
            return result;
        }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
        if (parts->scheme == "https") {
            result.error = ProbeError::connection_failed;
            return result;
        }
#endif
        if (throttle) throttle->acquire(parts->host);

        auto res = request_once(*parts, cfg, true);
        if (res && (res->status == 405 || res->status == 501)) res = request_once(*parts, cfg, false);
        if (!res) {
            result.error = classify(res.error());
            return result;
        }
        if (is_redirect(res->status)) {
            if (hops >= cfg.max_redirects) {
                result.error = ProbeError::too_many_redirects;
                return result;
            }
            std::string location = res->get_header_value("Location");
            if (location.empty()) {
                result.final_status = res->status;
                return result;
            }
            if (location.find("://") == std::string::npos) {
                std::string origin = parts->scheme + "://" + parts->host + ":" +
                                     std::to_string(parts->port);
                location = location[0] == '/' ? origin + location
                                              : origin + "/" + location;
            }
            result.redirect_chain.push_back(location);
            current = std::move(location);
            continue;
        }
        result.final_status = res->status;
        return result;
    }
}

// Runs `task(i)` for i in [0,n) on up to `parallel` threads.
void run_parallel(std::size_t n, std::size_t parallel, const std::function<void(std::size_t)>& task) {
    if (n == 0) return;
    std::size_t workers = std::max<std::size_t>(1, std::min(parallel, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                task(i);
            }
        });
    }
    for (auto& t : threads) t.join();
}

bool schema_namespaced(const std::string& iri) {
    for (std::string_view ns : skos::schema_namespaces()) {
        if (iri.starts_with(ns)) return true;
    }
    return false;
}

}  // namespace

LinkProbeResult probe_uri(const std::string& uri, const NetworkConfig& cfg) {
    return probe_uri_throttled(uri, cfg, nullptr);
}

ProbeReport probe_links(const Vocabulary& v, const NetworkConfig& cfg) {
    std::vector<std::string> candidates;
    for (TermId id : v.resources()) {
        const rdf::Term& t = v.pool()[id];
        if (!rdf::is_iri(t)) continue;
        const std::string& iri = rdf::as_iri(t).value;
        if (!iri.starts_with("http://") && !iri.starts_with("https://")) continue;
        if (schema_namespaced(iri)) continue;
        candidates.push_back(iri);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto sample = sample_indices(candidates.size(), cfg.subsample_rate, cfg.random_seed);

    ProbeReport report;
    report.candidate_total = candidates.size();
    report.sampled = sample.size();
    report.extrapolated = cfg.subsample_rate < 1.0;
    report.results.resize(sample.size());

    HostThrottle throttle(cfg.host_delay);
    run_parallel(sample.size(), cfg.max_parallel_requests, [&](std::size_t i) {
        report.results[i] = probe_uri_throttled(candidates[sample[i]], cfg, &throttle);
    });

    for (const LinkProbeResult& r : report.results) {
        if (r.broken(cfg.accept_any_2xx)) report.broken.push_back(r.uri);
    }
    std::sort(report.broken.begin(), report.broken.end());
    report.extrapolated_total = extrapolate_total(report.broken.size(), cfg.subsample_rate);
    return report;
}

namespace {

std::string url_encode(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        bool unreserved = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' || c == '~';
        if (unreserved) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xf];
        }
    }
    return out;
}

enum class AskOutcome { has_results, empty, error };

AskOutcome sparql_ask(const UrlParts& endpoint, const std::string& concept_iri,
                      const NetworkConfig& cfg) {
    std::string query = "ASK { ?s ?p <" + concept_iri + "> }";
    std::string target = endpoint.target;
    target += target.find('?') == std::string::npos ? '?' : '&';
    target += "query=" + url_encode(query);

    UrlParts request = endpoint;
    request.target = target;
    auto res = request_once(request, cfg, false);
    if (!res || res->status != 200) return AskOutcome::error;
    try {
        auto json = nlohmann::json::parse(res->body);
        if (json.contains("boolean"))
            return json["boolean"].get<bool>() ? AskOutcome::has_results : AskOutcome::empty;
        if (json.contains("results")) {
            const auto& bindings = json["results"]["bindings"];
            return bindings.empty() ? AskOutcome::empty : AskOutcome::has_results;
        }
    } catch (const nlohmann::json::exception&) {
    }
    return AskOutcome::error;
}

}  // namespace

InlinkReport find_missing_inlinks(const Vocabulary& v, const NetworkConfig& cfg) {
    if (!cfg.sparql_endpoint) throw EndpointUnreachableError("(not configured)");
    auto endpoint = parse_http_url(*cfg.sparql_endpoint);
    if (!endpoint) throw EndpointUnreachableError(*cfg.sparql_endpoint);

    const auto& concepts = v.authoritative_concepts();
    std::vector<std::string> iris;
    iris.reserve(concepts.size());
    for (TermId c : concepts) {
        const rdf::Term& t = v.pool()[c];
        if (rdf::is_iri(t)) iris.push_back(rdf::as_iri(t).value);
    }
    std::sort(iris.begin(), iris.end());

    auto sample = sample_indices(iris.size(), cfg.subsample_rate, cfg.random_seed);

    std::vector<AskOutcome> outcomes(sample.size(), AskOutcome::error);
    HostThrottle throttle(cfg.host_delay);
    run_parallel(sample.size(), cfg.max_parallel_requests, [&](std::size_t i) {
        throttle.acquire(endpoint->host);
        outcomes[i] = sparql_ask(*endpoint, iris[sample[i]], cfg);
    });

    InlinkReport report;
    report.sampled = sample.size();
    report.extrapolated = cfg.subsample_rate < 1.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (outcomes[i] == AskOutcome::empty) report.affected.push_back(iris[sample[i]]);
        if (outcomes[i] == AskOutcome::error) ++report.query_errors;
    }
    if (!sample.empty() && report.query_errors == sample.size())
        throw EndpointUnreachableError(*cfg.sparql_endpoint);

    std::sort(report.affected.begin(), report.affected.end());

    // Errors shrink the extrapolation base.
    std::size_t successes = report.sampled - report.query_errors;
    double effective_rate =
        iris.empty() ? 1.0 : static_cast<double>(successes) / static_cast<double>(iris.size());
    report.extrapolated_total = extrapolate_total(report.affected.size(), effective_rate);
    return report;
}

std::vector<std::string> find_missing_outlinks(const Vocabulary& v) {
    const rdf::TermPool& pool = v.pool();
    auto external = [&](TermId id) {
        const rdf::Term& t = pool[id];
        if (!rdf::is_iri(t)) return false;
        const std::string& iri = rdf::as_iri(t).value;
        return !iri.starts_with(v.namespace_prefix()) && !schema_namespaced(iri);
    };

    std::unordered_set<TermId> linked;
    for (const IdTriple& t : v.asserted().triples()) {
        if (v.is_authoritative(t.s) && external(t.o)) linked.insert(t.s);
        if (v.is_authoritative(t.o) && external(t.s)) linked.insert(t.o);
    }

    std::vector<std::string> result;
    for (TermId c : v.authoritative_concepts()) {
        if (!linked.count(c)) result.push_back(v.iri_of(c));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::unordered_set<std::string> parse_iri_list(std::string_view text) {
    std::unordered_set<std::string> iris;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        iris.emplace(line);
    }
    return iris;
}

const std::unordered_set<std::string>& skos_current_terms() {
    static const auto terms = parse_iri_list(embedded::kSkosTermsCurrent);
    return terms;
}

const std::unordered_set<std::string>& skos_deprecated_terms() {
    static const auto terms = parse_iri_list(embedded::kSkosTermsDeprecated);
    return terms;
}

std::vector<std::string> find_undefined_skos_resources(
    const Vocabulary& v, const std::unordered_set<std::string>& current_terms,
    const std::unordered_set<std::string>& deprecated_terms) {
    const rdf::TermPool& pool = v.pool();
    std::unordered_set<TermId> seen;
    std::vector<std::string> result;
    auto check = [&](TermId id) {
        if (!seen.insert(id).second) return;
        const rdf::Term& t = pool[id];
        if (!rdf::is_iri(t)) return;
        const std::string& iri = rdf::as_iri(t).value;
        if (!iri.starts_with(skos::kSkosNs)) return;
        if (deprecated_terms.count(iri) || !current_terms.count(iri)) result.push_back(iri);
    };
    for (const IdTriple& t : v.asserted().triples()) {
        check(t.s);
        check(t.p);
        check(t.o);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::string> find_undefined_skos_resources(const Vocabulary& v) {
    return find_undefined_skos_resources(v, skos_current_terms(), skos_deprecated_terms());
}

}  // namespace skoslint::checks
