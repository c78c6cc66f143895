"""Local cohomology with monomial supports and toric sheaf cohomology."""

import hashlib
import json

from ._core import (
    CrossCheckFailure,
    FinitenessViolation,
    InvalidInput,
    __version__,
    alexander_dual,
    betti_support,
    restricted_cech_dims,
    sigma_direct,
    sigma_dual,
    smith_normal_form,
)
from ._core import run as _run

__all__ = [
    "CrossCheckFailure",
    "FinitenessViolation",
    "InvalidInput",
    "__version__",
    "alexander_dual",
    "betti_support",
    "restricted_cech_dims",
    "run",
    "sigma_direct",
    "sigma_dual",
    "smith_normal_form",
]


def run(operation, document, **options):
    """Run a command on an input document (dict or JSON text) and return the report dict.

    The digest matches the command-line tool when ``document`` is the exact file text.
    """
    text = document if isinstance(document, str) else json.dumps(document, sort_keys=True)
    report = json.loads(_run(operation, text, **options))
    report["input_digest"] = "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()
    return report
