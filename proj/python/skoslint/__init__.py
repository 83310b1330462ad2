"""SKOS vocabulary quality checks backed by the C++ core."""

import json as _json

from skoslint._core import (  # noqa: F401
    Graph,
    InvalidThresholdError,
    NoConceptsError,
    RdfSyntaxError,
    VocabStats,
    Vocabulary,
    __version__,
    analyze_json,
    build_vocabulary,
    check_label_conflicts,
    check_language_coverage,
    check_language_tags,
    check_undocumented_concepts,
    entail,
    find_components,
    find_hierarchy_cycles,
    find_missing_outlinks,
    find_orphan_concepts,
    find_schemes_without_top_concepts,
    find_solely_transitive_pairs,
    find_top_concepts_with_broader,
    find_undefined_skos_resources,
    find_valueless_associative_relations,
    infer_namespace,
    parse_file,
    parse_string,
    run_cli,
    validate_language_tag,
)


def analyze(vocabulary, **kwargs):
    """Run checks and return the report as a dict. See analyze_json."""
    return _json.loads(analyze_json(vocabulary, **kwargs))
