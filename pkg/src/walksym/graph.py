"""Simple undirected graphs, graph6 I/O, and standard families."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadParams, Graph6Error, InvalidByte, MalformedHeader, OversizeGraph, TruncatedBody

MAX_N = 62
GRAPH6_MARKER = ">>graph6<<"

FAMILIES = ("complete", "cycle", "path", "star", "complete_bipartite", "hypercube", "petersen")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask.  Construct through
    :meth:`from_edges`, :meth:`from_rows` or :func:`parse_graph6`; the
    constructors validate symmetry, loops and the vertex cap.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise OversizeGraph(f"graphs need 1 <= n <= {MAX_N}, got n = {self.n}")
        if len(self.rows) != self.n:
            raise BadParams("rows length must equal n")
        full = (1 << self.n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full or (r >> v) & 1:
                raise BadParams(f"row {v} has a loop or an out-of-range neighbour")
            for u in _bits(r):
                if not (self.rows[u] >> v) & 1:
                    raise BadParams(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        return cls(len(rows), tuple(int(r) for r in rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_N:
            raise OversizeGraph(f"graphs need 1 <= n <= {MAX_N}, got n = {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise BadParams(f"bad edge ({u}, {v}) for n = {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_code(cls, n: int, code: int) -> Graph:
        """Inverse of :meth:`code`."""
        L = n * (n - 1) // 2
        rows = [0] * n
        k = L - 1
        for j in range(1, n):
            for i in range(j):
                if (code >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(bin(r).count("1") for r in self.rows)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees)) == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def adjacency(self) -> list[list[int]]:
        return [[(r >> v) & 1 for v in range(self.n)] for r in self.rows]

    def code(self) -> int:
        """Edge mask in graph6 bit order, first pair most significant."""
        c = 0
        for j in range(1, self.n):
            rj = self.rows[j]
            for i in range(j):
                c = (c << 1) | ((rj >> i) & 1)
        return c

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise BadParams("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for u in _bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def __str__(self) -> str:
        return write_graph6(self)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record.

    A leading ``>>graph6<<`` marker and trailing line terminators are
    accepted.  Only the single-byte header (``n <= 62``) is supported.
    """
    s = text.rstrip("\r\n")
    if s.startswith(GRAPH6_MARKER):
        s = s[len(GRAPH6_MARKER):]
    if not s:
        raise MalformedHeader("empty graph6 record")
    data = s.encode("latin-1", errors="replace")
    head = data[0]
    if head == 126:
        raise OversizeGraph("multi-byte graph6 header: n > 62 is not supported")
    if not 63 <= head <= 125:
        raise MalformedHeader(f"header byte {head} outside 63..125")
    n = head - 63
    if n == 0:
        raise OversizeGraph("graph6 record for the empty graph (n = 0); need n >= 1")
    L = n * (n - 1) // 2
    nbytes = (L + 5) // 6
    body = data[1:]
    for b in body:
        if not 63 <= b <= 126:
            raise InvalidByte(f"body byte {b} outside 63..126")
    if len(body) < nbytes:
        raise TruncatedBody(f"expected {nbytes} body bytes for n = {n}, got {len(body)}")
    if len(body) > nbytes:
        raise InvalidByte(f"{len(body) - nbytes} trailing bytes after graph6 body")
    acc = 0
    for b in body:
        acc = (acc << 6) | (b - 63)
    code = acc >> (6 * nbytes - L)
    return Graph.from_code(n, code)


def write_graph6(g: Graph) -> str:
    L = g.n * (g.n - 1) // 2
    nbytes = (L + 5) // 6
    acc = g.code() << (6 * nbytes - L)
    body = bytearray(nbytes)
    for k in range(nbytes - 1, -1, -1):
        body[k] = (acc & 63) + 63
        acc >>= 6
    return chr(63 + g.n) + body.decode("ascii")


def read_graph6_lines(lines: Iterable[str]):
    """Yield ``(line_number, Graph)`` for non-blank lines; errors name the line."""
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line.strip())
        except (Graph6Error, BadParams) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc


# --------------------------------------------------------------------------
# connectivity and families


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0, leaves 1..leaves."""
    if leaves < 1:
        raise BadParams("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise BadParams("complete_bipartite needs both parts non-empty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    """Q_d on 0..2^d-1, vertices adjacent when their labels differ in one bit."""
    if not 0 <= d <= 5:
        raise BadParams("hypercube dimension must be in 0..5 (2^d <= 62)")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


_ARITY = {
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "star": 1,
    "complete_bipartite": 2,
    "hypercube": 1,
    "petersen": 0,
}


def make_family(family: str, *params: int) -> Graph:
    """Build a standard labeled graph.

    >>> write_graph6(make_family("cycle", 4))
    'Cl'
    """
    if family not in _ARITY:
        raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != _ARITY[family]:
        raise BadParams(f"{family} takes {_ARITY[family]} parameter(s), got {len(params)}")
    try:
        params = tuple(int(p) for p in params)
    except (TypeError, ValueError):
        raise BadParams(f"{family} parameters must be integers") from None
    if any(p < 0 for p in params):
        raise BadParams("family parameters must be non-negative")
    if family in ("complete", "path") and params[0] < 1:
        raise BadParams(f"{family} needs n >= 1")
    if family == "complete_bipartite" and sum(params) > MAX_N:
        raise BadParams(f"complete_bipartite needs a + b <= {MAX_N}")
    if family == "star" and params[0] + 1 > MAX_N:
        raise BadParams(f"star needs at most {MAX_N - 1} leaves")
    if family in ("complete", "cycle", "path") and params[0] > MAX_N:
        raise BadParams(f"{family} needs n <= {MAX_N}")
    builder = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "star": star,
        "complete_bipartite": complete_bipartite,
        "hypercube": hypercube,
        "petersen": petersen,
    }[family]
    return builder(*params)
