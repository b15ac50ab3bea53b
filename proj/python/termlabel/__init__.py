"""Label classes of publication hierarchies with ranked noun-phrase terms."""

import json

from ._core import (
    Pipeline,
    SyntheticParams,
    TermlabelError,
    confidence_interval,
    generate_synthetic,
    normalize,
    score,
    standard_approaches,
)

__all__ = [
    "Pipeline",
    "SyntheticParams",
    "TermlabelError",
    "confidence_interval",
    "extract_terms",
    "generate_synthetic",
    "normalize",
    "score",
    "standard_approaches",
]


def extract_terms(record, fields="title,keywords", mode="builtin"):
    """Sorted unique terms of one publication record given as a dict."""
    from ._core import extract_terms_json

    return extract_terms_json(json.dumps(record), fields, mode)
