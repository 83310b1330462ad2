#pragma once

#include <string>
#include <string_view>
#include <unordered_set>

namespace skoslint::lang {

// One lowercase code per line; '#' starts a comment.
std::unordered_set<std::string> parse_code_list(std::string_view text);
std::unordered_set<std::string> load_code_list(const std::string& path);

// The bundled ISO 639-1/639-2 primary subtag list.
const std::unordered_set<std::string>& iso639_codes();

struct TagValidation {
    // Grammar: 1*8ALPHA primary subtag, then '-'-separated 1*8 alphanumeric
    // subtags.
    bool grammar_only = false;
    const std::unordered_set<std::string>* codes = nullptr;  // defaults to iso639_codes()
};

// True iff `tag` matches the language tag grammar and, unless grammar_only
// is set, its primary subtag is a registered ISO 639 code or the tag uses
// the "x-"/"i-" private and IANA prefixes.
bool validate_language_tag(std::string_view tag, const TagValidation& options = {});

}  // namespace skoslint::lang
