#pragma once

#include <vector>

#include "skoslint/checks_labeling.hpp"
#include "skoslint/checks_linkeddata.hpp"
#include "skoslint/checks_structure.hpp"
#include "skoslint/issues.hpp"
#include "skoslint/report.hpp"

namespace skoslint {

struct CheckOptions {
    double threshold = 1.0;
    bool case_sensitive = false;
    checks::LabelScope label_scope = checks::LabelScope::all_label_properties;
    lang::TagValidation tag_validation;
};

struct RunOptions {
    // Empty means all fifteen.
    std::vector<IssueId> issues;
    bool offline = false;
    checks::NetworkConfig network;
    CheckOptions check;
};

// Runs the selected checks over the vocabulary and returns one result
// per issue, in canonical order. Network checks come back as skipped
// when offline or unusable; checks are independent of one another.
std::vector<report::IssueResult> run_checks(const skos::Vocabulary& v, const RunOptions& options);

}  // namespace skoslint
