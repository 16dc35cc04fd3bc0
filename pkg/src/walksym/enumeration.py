"""Isomorph-free enumeration of small connected graphs."""
from __future__ import annotations

from typing import Iterator

from . import kernels
from .errors import Oversize
from .graph import Graph, parse_graph6
from .symmetry import canonical_form

MAX_ENUM_N = kernels.MAX_SCAN_N

# Connected graphs on n unlabeled vertices, n = 1..7 (used only in messages
# and tests; the enumerator never consults it).
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def canonical_connected_forms(n: int) -> list[bytes]:
    """Sorted canonical forms of every connected graph on ``n`` vertices.

    The compiled mask scan yields every connected labeling whose degree
    sequence is non-increasing; duplicates collapse under
    :func:`walksym.symmetry.canonical_form`.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise Oversize(f"enumerate_connected supports 1 <= n <= {MAX_ENUM_N}; got n = {n}. Use an external .g6 corpus.")
    forms = {canonical_form(Graph.from_code(n, int(code))) for code in kernels.scan_codes(n)}
    return sorted(forms)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield one canonically labeled graph per isomorphism class, ascending by canonical bytes."""
    for form in canonical_connected_forms(n):
        yield parse_graph6(form.decode("ascii"))


def corpus(nmax: int = MAX_ENUM_N) -> Iterator[Graph]:
    """All connected graphs on 1..nmax vertices, by n then canonical order."""
    for n in range(1, nmax + 1):
        yield from enumerate_connected(n)
