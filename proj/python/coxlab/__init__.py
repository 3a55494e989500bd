"""Exact computations for finite real reflection groups."""

import json

from ._coxlab import (
    CoxlabError,
    GroupTooLarge,
    InvalidType,
    chain_number,
    default_suite_types,
    degrees,
    factorizations,
    identity_names,
    laplacian_charpoly,
    run,
    zeta,
)
from ._coxlab import verify as _verify

__all__ = [
    "CoxlabError",
    "GroupTooLarge",
    "InvalidType",
    "chain_number",
    "default_suite_types",
    "degrees",
    "factorizations",
    "group_info",
    "identity_names",
    "laplacian_charpoly",
    "lattice_summary",
    "run",
    "verify",
    "zeta",
]


def verify(identity, type, k=None, r=None, allow_large=False):
    """Run one identity and return its report as a dict."""
    return json.loads(_verify(identity, type, k, r, allow_large))


def _json_command(*args):
    code, out, err = run(list(args))
    if code != 0:
        raise CoxlabError(err.strip())
    return json.loads(out)


def group_info(type, allow_large=False):
    flags = ["--allow-large"] if allow_large else []
    return _json_command(*flags, "group", "info", type)


def lattice_summary(type, allow_large=False):
    flags = ["--allow-large"] if allow_large else []
    return _json_command(*flags, "lattice", "summary", type)
