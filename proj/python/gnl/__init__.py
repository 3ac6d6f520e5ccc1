"""Exact checks for local distinguishability of orthogonal product sets.

State sets, reports, certificates and classifications are plain dicts in the
same JSON layout the `gnl` command line tool reads and writes.
"""

import json

from . import _gnl
from ._gnl import GnlError

__all__ = [
    "GnlError",
    "families",
    "construct",
    "verify",
    "classify",
    "verify_certificate",
    "table1",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def families():
    """Names accepted by `construct`."""
    return list(_gnl.families())


def construct(family, dims=()):
    """Generate a state set document, e.g. construct("type2-tripartite", [3, 4, 5])."""
    return json.loads(_gnl.construct(family, list(dims)))


def verify(doc, party_group=None, backend="exact", tolerance=1e-9):
    """OPLM reports for every single party, or for one grouped party."""
    if backend not in ("exact", "float"):
        raise ValueError("backend must be 'exact' or 'float'")
    out = _gnl.verify(_text(doc), list(party_group or []), backend == "float", tolerance)
    return json.loads(out)


def classify(doc, rider="pairwise", grouped_sides=False, budget_ms=0):
    """Genuineness, irreducibility and type, with per-bipartition certificates."""
    return json.loads(_gnl.classify(_text(doc), rider, grouped_sides, budget_ms))


def verify_certificate(doc, certificate, rider="pairwise"):
    """List of reasons the certificate is rejected; empty when it checks out."""
    return list(_gnl.verify_certificate(_text(doc), _text(certificate), rider))


def table1(grid="small"):
    """Regenerate the construction table on the small or full grid."""
    return json.loads(_gnl.table1(grid))
