#include "skoslint/language.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "skoslint/embedded/iso639_codes.hpp"

namespace skoslint::lang {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_alnum(char c) { return is_alpha(c) || (c >= '0' && c <= '9'); }

}  // namespace

std::unordered_set<std::string> parse_code_list(std::string_view text) {
    std::unordered_set<std::string> codes;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (!line.empty()) codes.insert(lower(line));
    }
    return codes;
}

std::unordered_set<std::string> load_code_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code list: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_list(buf.str());
}

const std::unordered_set<std::string>& iso639_codes() {
    static const std::unordered_set<std::string> codes = parse_code_list(embedded::kIso639Codes);
    return codes;
}

bool validate_language_tag(std::string_view tag, const TagValidation& options) {
    if (tag.empty()) return false;

    // Grammar pass over '-'-separated subtags.
    std::size_t pos = 0;
    std::size_t subtag_index = 0;
    std::string primary;
    while (pos <= tag.size()) {
        std::size_t dash = tag.find('-', pos);
        std::string_view subtag =
            dash == std::string_view::npos ? tag.substr(pos) : tag.substr(pos, dash - pos);
        if (subtag.empty() || subtag.size() > 8) return false;
        for (char c : subtag) {
            if (subtag_index == 0 ? !is_alpha(c) : !is_alnum(c)) return false;
        }
        if (subtag_index == 0) primary = lower(subtag);
        ++subtag_index;
        if (dash == std::string_view::npos) break;
        pos = dash + 1;
    }

    if (options.grammar_only) return true;

    // x- and i- prefixed tags are private/IANA registrations.
    if ((primary == "x" || primary == "i") && subtag_index >= 2) return true;
    if (primary.size() < 2) return false;
    const auto& codes = options.codes ? *options.codes : iso639_codes();
    return codes.count(primary) != 0;
}

}  // namespace skoslint::lang
